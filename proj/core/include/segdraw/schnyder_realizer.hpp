#pragma once

#include <array>
#include <string>
#include <vector>

#include "segdraw/graph_model.hpp"

namespace segdraw {

/// Tree index arithmetic on {1,2,3}.
inline int next_tree(int k) { return k % 3 + 1; }
inline int prev_tree(int k) { return (k + 1) % 3 + 1; }

/// Directed labels of a realizer. A dart labelled k is the outgoing k-edge at its tail.
struct SchnyderRealizer {
    std::array<int, 3> roots{-1, -1, -1};
    std::vector<int> dart_label;            ///< 0 or k in {1,2,3}, per dart
    std::vector<std::array<int, 3>> out;    ///< out[v][k-1] = k-parent of v, or -1
    std::array<RootedOrderedTree, 3> trees; ///< T_1, T_2, T_3

    int root(int k) const { return roots[k - 1]; }
    int parent(int v, int k) const { return out[v][k - 1]; }
    const RootedOrderedTree& tree(int k) const { return trees[k - 1]; }
};

/// Vertex preceding v on the traced (clockwise) outer face.
int outer_predecessor(const PlaneGraph& g, int v);

/// Roots are the first three outer vertices in ccw order starting at the smallest id.
/// Throws GraphError if the graph is not 3-connected or the ordering gets stuck.
SchnyderRealizer compute_realizer(const PlaneGraph& g);

/// Builds T_1..T_3 from the dart labels. Children follow the parent edge in ccw order;
/// at a root they start at the outer corner.
void build_trees(const PlaneGraph& g, SchnyderRealizer& r);

/// Realizer read from `k u v` lines.
SchnyderRealizer parse_realizer(const PlaneGraph& g, std::string_view text);
std::string serialize(const PlaneGraph& g, const SchnyderRealizer& r);

struct RealizerViolation {
    int vertex = -1;  ///< -1 for tree-level violations
    std::string kind;
    std::string detail;
};

std::vector<RealizerViolation> validate_realizer(const PlaneGraph& g, const SchnyderRealizer& r);

struct LeafAssignment {
    int vertex = -1;
    int tree = 0;
    int face = -1;
};

struct LeafFaceAssignment {
    std::vector<LeafAssignment> pairs;
    /// Assigned pairs per face index of g.
    std::vector<std::vector<int>> by_face;
    /// Roots may appear twice on the outer face.
    std::array<int, 3> roots{-1, -1, -1};
};

LeafFaceAssignment assign_leaves_to_faces(const PlaneGraph& g, const SchnyderRealizer& r);

struct FaceAssignmentCheck {
    bool per_face_caps = true;      ///< interior <= deg(f) - 2, outer <= deg(f*) + 3
    bool no_duplicates = true;      ///< no vertex twice on one face, roots on the outer face excepted
    bool consecutive_same_tree = true;
    bool two_unassigned = true;     ///< no interior face of degree p has >= p - 1 assigned vertices
    bool ok() const { return per_face_caps && no_duplicates && consecutive_same_tree && two_unassigned; }
};

FaceAssignmentCheck check_face_assignment(const PlaneGraph& g, const LeafFaceAssignment& a);

std::array<int, 3> leaf_census(const SchnyderRealizer& r);

/// Index k in {1,2,3} of the tree with fewest leaves, smallest k on ties.
int min_leaf_tree(const SchnyderRealizer& r);
const RootedOrderedTree& pick_min_leaf_tree(const SchnyderRealizer& r);

}  // namespace segdraw
