#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segdraw/graph_model.hpp"

namespace segdraw {

/// Sign of the cross product (b - a) x (c - a), computed exactly.
int orientation(const Point& a, const Point& b, const Point& c);
__int128 cross(const Point& o, const Point& a, const Point& b);

/// True iff the closed segments ab and cd share a point.
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d);

struct PlanarityVerdict {
    bool planar = true;
    int edge_a = -1;   ///< first witness edge (lexicographic pair order)
    int edge_b = -1;   ///< second witness edge, or -1 for a vertex witness
    int vertex = -1;   ///< vertex lying on edge_a, when that is the witness
    std::string reason;
};

/// Exact planarity test for a straight-line drawing.
PlanarityVerdict check_planarity(const GridDrawing& d);

struct SegmentPartition {
    int count = 0;
    std::vector<int> segment_of_edge;
    /// Vertex sequence of every maximal segment, end to end.
    std::vector<std::vector<int>> paths;
    /// Pairs of edges leaving a vertex in the same direction (not merged).
    int overlaps = 0;
};

/// Maximal collinear paths: edges at a shared vertex merge iff their directions are opposite.
SegmentPartition count_segments(const GridDrawing& d);

enum class Verdict { Yes, No, Unchecked };
std::string to_string(Verdict v);

struct MonotoneVerdict {
    Verdict verdict = Verdict::Unchecked;
    int from = -1;  ///< witness pair without a monotone path
    int to = -1;
};

/// Brute force over simple paths; Unchecked when n exceeds the cap.
MonotoneVerdict check_monotone(const GridDrawing& d, int cap = 10);

/// Direction vectors fit in an open half-plane.
bool directions_monotone(const std::vector<Point>& dirs);

struct LowerBounds {
    int odd_half = 0;        ///< number of odd-degree vertices / 2
    int max_half_degree = 0; ///< max over v of ceil(deg(v) / 2)
    int density = 0;         ///< ceil(m / (n - 1))
    int max() const;
};

LowerBounds lower_bounds(int n, const std::vector<Edge>& edges);
LowerBounds lower_bounds(const PlaneGraph& g);

struct SegmentReport {
    int segment_count = 0;
    std::vector<int> segment_of_edge;
    LowerBounds bounds;
    std::int64_t width = 0;
    std::int64_t height = 0;
    bool planar = false;
    std::string planarity_witness;
    Verdict monotone = Verdict::Unchecked;

    /// `key=value` lines; stable order.
    std::string to_key_values() const;
    /// Single line used as drawing-file trailer.
    std::string summary_line() const;
};

SegmentReport make_report(const GridDrawing& d, int monotone_cap = 10);

}  // namespace segdraw
