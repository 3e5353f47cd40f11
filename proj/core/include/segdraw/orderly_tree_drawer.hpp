#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segdraw/graph_model.hpp"

namespace segdraw {

struct OrderlyViolation {
    int vertex = -1;
    int neighbor = -1;
    std::string expected;
    std::string found;
};

/// Rotation of every vertex, read from its parent edge (at the root from `root_start`), must split
/// into parent, earlier unrelated neighbours, children, later unrelated neighbours.
/// `root_start` is the neighbour the root's sequence starts at; -1 uses the outer corner.
std::vector<OrderlyViolation> check_orderly(const PlaneGraph& g, const RootedOrderedTree& t, int root_start = -1);

struct SlopeAssignment {
    std::vector<std::int64_t> slope;  ///< per vertex; slope of the edge to the parent, 0 at the root
    std::vector<int> order;           ///< ccw post-order, root last
    std::int64_t max_slope = 0;
};

SlopeAssignment assign_slopes(const RootedOrderedTree& t);

/// Root at (0,0), every other vertex at parent + (1, slope).
GridDrawing draw_slope_disjoint(const RootedOrderedTree& t, const SlopeAssignment& s);

struct SlopeInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Slope range used by e_u and the edges of T[u]; check_slope_nesting verifies that each is a
/// full integer interval, siblings are disjoint and children nest in parents.
std::vector<SlopeInterval> slope_intervals(const RootedOrderedTree& t, const SlopeAssignment& s);
bool check_slope_nesting(const RootedOrderedTree& t, const SlopeAssignment& s);

}  // namespace segdraw
