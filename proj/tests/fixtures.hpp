#pragma once

#include <string>
#include <vector>

#include "segdraw/generators.hpp"
#include "segdraw/graph_model.hpp"

namespace fixture {

using namespace segdraw;

inline PlaneGraph triangle() { return from_neighbor_rotation({{1, 2}, {2, 0}, {0, 1}}); }

inline PlaneGraph k4() { return gen_stacked_triangulation({Family::StackedTriangulation, 4, 0}); }

inline PlaneGraph prism() { return gen_prism(6); }

/// Q3 is the prism over a 4-cycle.
inline PlaneGraph cube() { return gen_prism(8); }

inline PlaneGraph wheel(int n) { return gen_wheel(n); }

inline RootedOrderedTree tree_from_parents(const std::vector<int>& parent) {
    RootedOrderedTree t;
    t.parent = parent;
    t.children.assign(parent.size(), {});
    for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
        if (parent[v] < 0) t.root = v;
        else t.children[parent[v]].push_back(v);
    }
    t.validate();
    return t;
}

inline RootedOrderedTree path(int n) { return gen_rooted_tree({Family::Path, n, 0}); }
inline RootedOrderedTree star(int n) { return gen_rooted_tree({Family::Star, n, 0}); }

/// Root 0 with `legs` legs of `len` vertices each.
inline RootedOrderedTree spider(int legs, int len) {
    std::vector<int> parent{-1};
    for (int l = 0; l < legs; ++l)
        for (int j = 0; j < len; ++j) parent.push_back(j == 0 ? 0 : static_cast<int>(parent.size()) - 1);
    return tree_from_parents(parent);
}

}  // namespace fixture
