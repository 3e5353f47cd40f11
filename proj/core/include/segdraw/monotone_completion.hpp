#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segdraw/graph_model.hpp"
#include "segdraw/metrics_verify.hpp"
#include "segdraw/orderly_tree_drawer.hpp"
#include "segdraw/schnyder_realizer.hpp"

namespace segdraw {

enum class StretchMethod { Region, Iterative };

struct StretchPlan {
    /// Per vertex: positive multiplier of the edge to its parent (0 at the root).
    std::vector<std::int64_t> factor;
    /// Non-tree edges of g, in insertion order.
    std::vector<int> insertion_order;
    StretchMethod method = StretchMethod::Region;
    int rounds = 0;
};

/// x(v) = F - |R_k(v)|, with F the number of interior faces and R_k(v) the set of interior faces
/// enclosed by v's (k+1)- and (k-1)-paths and the outer boundary. Strictly increases along T_k.
std::vector<std::int64_t> region_x(const PlaneGraph& g, const SchnyderRealizer& r, int k);

/// Tree-edge directions of `base` scaled by `factor`, root at (0,0), plus every edge of g.
GridDrawing apply_plan(const PlaneGraph& g, const RootedOrderedTree& t, const GridDrawing& base,
                       const StretchPlan& plan);

struct StretchOptions {
    /// Rounds of the iterative scheme; 0 means 8n.
    int cap = 0;
    /// Realizer and tree index for the region plan; without them only the iterative scheme runs.
    const SchnyderRealizer* realizer = nullptr;
    int tree = 0;
    bool allow_iterative = true;
};

/// Throws GraphError("unconverged ...") if no planar plan is found.
StretchPlan plan_stretch(const PlaneGraph& g, const RootedOrderedTree& t, const GridDrawing& base,
                         const StretchOptions& opt = {});

/// Divides all coordinates relative to the first vertex by their common gcd.
void normalize_gcd(GridDrawing& d);

/// Every tree edge keeps its direction up to a positive factor.
bool slopes_preserved(const RootedOrderedTree& t, const GridDrawing& base, const GridDrawing& stretched);

struct Completion {
    GridDrawing drawing;
    SegmentReport report;
    StretchPlan plan;
    int lambda = 0;
    bool slopes_preserved = false;
};

Completion complete_drawing(const PlaneGraph& g, const RootedOrderedTree& t, const GridDrawing& base,
                            const StretchOptions& opt = {}, int monotone_cap = 10);

struct ThreeConnectedDrawing {
    SchnyderRealizer realizer;
    int tree = 0;
    std::array<int, 3> census{};
    std::vector<OrderlyViolation> orderly;
    GridDrawing base;
    Completion completion;
};

/// Realizer, minimum-leaf tree, slope-disjoint tree drawing, completion.
ThreeConnectedDrawing draw_three_connected(const PlaneGraph& g, int monotone_cap = 10, int stretch_cap = 0);

}  // namespace segdraw
