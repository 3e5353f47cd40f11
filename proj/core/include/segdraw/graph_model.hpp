#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace segdraw {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// A dart is a directed edge: dart 2e runs edges[e].u -> edges[e].v, dart 2e+1 the reverse.
inline int dart_of(int e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline int edge_of_dart(int d) { return d >> 1; }
inline int twin(int d) { return d ^ 1; }

/// Plane graph given by a rotation system and a designated outer face.
///
/// Faces are traced with the face on the left of every dart: after arriving at v
/// along (u,v) the walk leaves along the edge preceding (v,u) in v's ccw rotation.
/// Bounded faces come out counter-clockwise, the outer face clockwise.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Validates the embedding; throws GraphError on any inconsistency.
    /// `outer` may list the outer face in either orientation; empty selects one.
    PlaneGraph(int n, std::vector<Edge> edges, std::vector<std::vector<int>> rotation,
               std::vector<int> outer = {});

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
    int other(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    /// Neighbours of v in ccw order.
    std::vector<int> neighbors(int v) const;

    int tail(int d) const { return d & 1 ? edges_[d >> 1].v : edges_[d >> 1].u; }
    int head(int d) const { return d & 1 ? edges_[d >> 1].u : edges_[d >> 1].v; }
    /// Dart leaving v along edge e.
    int dart_from(int v, int e) const { return dart_of(e, edges_[e].u != v); }
    /// Next dart on the same face (face on the left).
    int next_in_face(int d) const;
    /// Position of edge e in the rotation of v.
    int rotation_index(int v, int e) const { return rot_pos_[dart_from(v, e)]; }

    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const std::vector<std::vector<int>>& face_darts() const { return face_darts_; }
    int face_of_dart(int d) const { return dart_face_[d]; }
    int outer_face_index() const { return outer_; }
    /// Outer face as traced (clockwise in the plane).
    const std::vector<int>& outer_face() const { return faces_[outer_]; }
    int face_count() const { return static_cast<int>(faces_.size()) + isolated_; }

    /// Edge index joining u and v, or -1.
    int find_edge(int u, int v) const;

private:
    int n_ = 0;
    int isolated_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<int> rot_pos_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> face_darts_;
    std::vector<int> dart_face_;
    int outer_ = 0;
};

/// Rooted tree with a fixed ccw child order.
struct RootedOrderedTree {
    int root = 0;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;

    int n() const { return static_cast<int>(parent.size()); }
    bool is_leaf(int v) const { return children[v].empty(); }
    int leaf_count() const;

    /// Throws GraphError unless parent/children agree and the tree spans 0..n-1.
    void validate() const;

    std::vector<int> preorder() const;
    std::vector<int> postorder() const;

    /// Same cyclic order at every vertex, new root.
    RootedOrderedTree rerooted(int new_root) const;

    /// Tree read from a plane tree: children follow the parent edge in ccw order,
    /// at the root they start with the first stored edge.
    static RootedOrderedTree from_plane_tree(const PlaneGraph& g, int root);

    /// Tree edges (parent, child) in preorder.
    std::vector<Edge> edges() const;
};

/// Integer drawing of a graph given by its edge list.
struct GridDrawing {
    std::vector<Point> coords;
    std::vector<Edge> edges;

    int n() const { return static_cast<int>(coords.size()); }
    /// Grid points spanned horizontally (max x - min x + 1).
    std::int64_t width() const;
    std::int64_t height() const;
    /// Throws GraphError if two vertices share a point or an edge is out of range.
    void validate() const;
};

struct TreeFile {
    PlaneGraph graph;
    int root = 0;
};

PlaneGraph parse_graph(std::string_view text);
TreeFile parse_tree(std::string_view text);
std::string serialize(const PlaneGraph& g);
std::string serialize(const TreeFile& t);

/// Plane tree from a rooted ordered tree, edges in preorder, rotation = parent then children.
PlaneGraph to_plane_graph(const RootedOrderedTree& t);

enum class Connectivity { Yes, No, Unverified };

/// Brute-force vertex connectivity test for k in {1,2,3}; Unverified above the cap.
Connectivity check_connectivity(const PlaneGraph& g, int k, int cap = 10000);

/// Same faces regardless of trace start: each face rotated to start at its smallest vertex.
std::vector<std::vector<int>> canonical_faces(const PlaneGraph& g);

}  // namespace segdraw
