#pragma once

#include <cstdint>
#include <vector>

#include "segdraw/graph_model.hpp"
#include "segdraw/metrics_verify.hpp"

namespace segdraw {

/// T rerooted at a vertex of degree >= 3, its contraction T~ and the leafless core T~~.
struct ReducedTrees {
    RootedOrderedTree t;
    RootedOrderedTree t_red;
    std::vector<int> red_vertex;   ///< T~ id -> T id
    RootedOrderedTree t_rred;
    std::vector<int> rred_vertex;  ///< T~~ id -> T id
    std::vector<int> belongs;      ///< degree-2 vertex -> T vertex it belongs to, else -1
    std::vector<int> gamma;        ///< per T vertex: degree-2 vertices belonging to it
    int alpha = 0;                 ///< leaves of T
    int beta = 0;                  ///< degree-2 vertices of T
};

/// Smallest id of degree >= 3, or -1 for a path.
int choose_root(const RootedOrderedTree& t);

/// Throws GraphError for paths.
ReducedTrees reduce(const RootedOrderedTree& t);

/// Extent of a subtree drawing around its root v, which sits at (0,0).
struct SubtreeBox {
    std::int64_t left = 0;
    std::int64_t right = 0;
    std::int64_t top = 0;
    std::int64_t bottom = 0;
    std::int64_t width() const { return left + right + 1; }
    std::int64_t height() const { return top + bottom + 1; }
};

struct LeafFanContext {
    bool leaf_in_rred = false;  ///< v has no children in T~~
    bool own_chain = false;     ///< some degree-2 vertex belongs to v
    bool first_child = false;   ///< v is the first child of its parent in T~~
};

/// Leaf positions relative to v for gammas sorted in non-increasing order.
std::vector<Point> place_leaf_fan(const std::vector<int>& gammas, const LeafFanContext& ctx);

/// Segment from v down-left with slope 1/i, spanning x in [-reach, 0].
struct LeftSegment {
    std::int64_t i = 1;
    std::int64_t reach = 0;
};

/// Left fan of a node on the first-child spine below v, `depth` rows below v.
struct SpineFan {
    std::int64_t depth = 0;
    std::vector<LeftSegment> segments;
};

/// Smallest d >= 0 such that no fan of `spine`, moved down by d, meets a fan of `own`.
std::int64_t step4_shift(const std::vector<LeftSegment>& own, const std::vector<SpineFan>& spine);

struct TreeDrawing {
    GridDrawing drawing;
    SegmentReport report;
    int root = -1;       ///< -1 for the path fast path
    bool path = false;
    RootedOrderedTree rooted;  ///< input rerooted at `root`
    /// Box of every T~~ node (indexed by T vertex), empty for the path case.
    std::vector<SubtreeBox> boxes;
    std::vector<int> subtree_size;
};

/// Throws GraphError for n < 3. Edges of the drawing are the tree edges (parent, child).
TreeDrawing draw_tree(const RootedOrderedTree& t, bool with_report = true);

struct SubtreeAccount {
    int v = -1;
    int n_plus = 0;
    int segments = 0;
    bool vertical = false;
    bool within_bound() const { return vertical ? 4 * segments <= 3 * n_plus - 1 : 4 * segments <= 3 * n_plus; }
};

/// Segments used by T+[v] for every non-root node of T~~.
std::vector<SubtreeAccount> subtree_accounting(const TreeDrawing& d, const SegmentPartition& parts);

}  // namespace segdraw
