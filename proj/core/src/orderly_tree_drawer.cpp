#include "segdraw/orderly_tree_drawer.hpp"

#include <algorithm>
#include <set>

#include "segdraw/schnyder_realizer.hpp"

namespace segdraw {

namespace {

const char* kBlock[] = {"parent", "earlier unrelated", "child", "later unrelated"};

}  // namespace

std::vector<OrderlyViolation> check_orderly(const PlaneGraph& g, const RootedOrderedTree& t, int root_start) {
    std::vector<OrderlyViolation> errs;
    const int n = g.n();
    if (t.n() != n) {
        errs.push_back({-1, -1, "spanning tree", "vertex count differs"});
        return errs;
    }
    const auto pre_order = t.preorder();
    std::vector<int> pre(n), size(n, 1);
    for (int i = 0; i < n; ++i) pre[pre_order[i]] = i;
    for (int v : t.postorder())
        if (t.parent[v] >= 0) size[t.parent[v]] += size[v];
    auto ancestor = [&](int a, int b) { return pre[a] <= pre[b] && pre[b] < pre[a] + size[a]; };

    for (int v = 0; v < n; ++v) {
        const auto& rot = g.rotation(v);
        const int deg = static_cast<int>(rot.size());
        int start = 0;
        if (v == t.root) {
            const int a = root_start >= 0 ? root_start : outer_predecessor(g, v);
            const int e = a < 0 ? -1 : g.find_edge(v, a);
            if (e < 0) {
                errs.push_back({v, a, "root on the outer face", "no outer corner"});
                continue;
            }
            start = g.rotation_index(v, e);
        } else {
            const int e = g.find_edge(v, t.parent[v]);
            if (e < 0) {
                errs.push_back({v, t.parent[v], "tree edge", "not an edge of the graph"});
                continue;
            }
            start = g.rotation_index(v, e);
        }
        int block = 0;
        std::vector<int> kids;
        for (int s = 0; s < deg; ++s) {
            const int u = g.other(rot[(start + s) % deg], v);
            int cls;
            if (u == t.parent[v]) {
                cls = 0;
            } else if (t.parent[u] == v) {
                cls = 2;
                kids.push_back(u);
            } else if (ancestor(u, v) || ancestor(v, u)) {
                errs.push_back({v, u, "unrelated neighbour", ancestor(u, v) ? "non-parent ancestor" : "non-child descendant"});
                continue;
            } else {
                cls = pre[u] < pre[v] ? 1 : 3;
            }
            if (cls < block) errs.push_back({v, u, std::string(kBlock[block]) + " or later", kBlock[cls]});
            block = std::max(block, cls);
        }
        if (kids != t.children[v]) errs.push_back({v, -1, "children in rotation order", "stored child order differs"});
    }
    return errs;
}

SlopeAssignment assign_slopes(const RootedOrderedTree& t) {
    SlopeAssignment s;
    s.slope.assign(t.n(), 0);
    s.order = t.postorder();
    std::int64_t prev = 0;
    for (int v : s.order) {
        if (v == t.root) break;
        if (t.is_leaf(v)) ++prev;
        s.slope[v] = prev;
    }
    s.max_slope = prev;
    return s;
}

GridDrawing draw_slope_disjoint(const RootedOrderedTree& t, const SlopeAssignment& s) {
    GridDrawing d;
    d.coords.assign(t.n(), {});
    d.edges = t.edges();
    for (int v : t.preorder())
        if (v != t.root) {
            const auto& p = d.coords[t.parent[v]];
            d.coords[v] = {p.x + 1, p.y + s.slope[v]};
        }
    return d;
}

std::vector<SlopeInterval> slope_intervals(const RootedOrderedTree& t, const SlopeAssignment& s) {
    std::vector<SlopeInterval> iv(t.n());
    for (int v : s.order) {
        if (v == t.root) continue;
        iv[v] = {s.slope[v], s.slope[v]};
        for (int c : t.children[v]) {
            iv[v].lo = std::min(iv[v].lo, iv[c].lo);
            iv[v].hi = std::max(iv[v].hi, iv[c].hi);
        }
    }
    return iv;
}

bool check_slope_nesting(const RootedOrderedTree& t, const SlopeAssignment& s) {
    const auto iv = slope_intervals(t, s);
    std::vector<std::set<std::int64_t>> used(t.n());
    for (int v : s.order) {
        if (v == t.root) continue;
        used[v].insert(s.slope[v]);
        for (int c : t.children[v]) {
            if (iv[c].lo < iv[v].lo || iv[c].hi > iv[v].hi) return false;
            used[v].insert(used[c].begin(), used[c].end());
            std::set<std::int64_t>().swap(used[c]);
        }
        if (static_cast<std::int64_t>(used[v].size()) != iv[v].hi - iv[v].lo + 1) return false;
    }
    for (int v = 0; v < t.n(); ++v) {
        std::vector<SlopeInterval> kids;
        for (int c : t.children[v]) kids.push_back(iv[c]);
        std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
        for (std::size_t i = 1; i < kids.size(); ++i)
            if (kids[i].lo <= kids[i - 1].hi) return false;
    }
    return true;
}

}  // namespace segdraw
