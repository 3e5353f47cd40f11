#include "segdraw/graph_model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace segdraw {

namespace {

std::vector<int> rotate_to_min(const std::vector<int>& f) {
    if (f.empty()) return f;
    auto it = std::min_element(f.begin(), f.end());
    std::vector<int> out(it, f.end());
    out.insert(out.end(), f.begin(), it);
    return out;
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t k = a.size();
    for (std::size_t s = 0; s < k; ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) ok = a[(s + i) % k] == b[i];
        if (ok) return true;
    }
    return false;
}

int count_components(int n, const std::vector<Edge>& edges) {
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    int c = n;
    for (const auto& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) { comp[a] = b; --c; }
    }
    return c;
}

}  // namespace

PlaneGraph::PlaneGraph(int n, std::vector<Edge> edges, std::vector<std::vector<int>> rotation,
                       std::vector<int> outer)
    : n_(n), edges_(std::move(edges)), rotation_(std::move(rotation)) {
    if (n < 0) throw GraphError("negative vertex count");
    if (static_cast<int>(rotation_.size()) != n) rotation_.resize(n);
    const int m = this->m();
    std::vector<std::pair<int, int>> seen;
    seen.reserve(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw GraphError("multi-edge present");

    rot_pos_.assign(2 * m, -1);
    for (int v = 0; v < n; ++v) {
        const auto& r = rotation_[v];
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            int e = r[i];
            if (e < 0 || e >= m) throw GraphError("embedding inconsistency: rotation of " + std::to_string(v) + " names unknown edge " + std::to_string(e));
            if (edges_[e].u != v && edges_[e].v != v)
                throw GraphError("embedding inconsistency: edge " + std::to_string(e) + " is not incident to " + std::to_string(v));
            int d = dart_from(v, e);
            if (rot_pos_[d] != -1) throw GraphError("embedding inconsistency: edge " + std::to_string(e) + " repeated at " + std::to_string(v));
            rot_pos_[d] = i;
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (rot_pos_[d] == -1)
            throw GraphError("embedding inconsistency: edge " + std::to_string(d >> 1) + " missing from rotation of " + std::to_string(tail(d)));

    dart_face_.assign(2 * m, -1);
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (dart_face_[d0] != -1) continue;
        const int id = static_cast<int>(faces_.size());
        std::vector<int> verts, darts;
        int d = d0;
        do {
            if (dart_face_[d] != -1) throw GraphError("embedding inconsistency: face tracing does not close");
            dart_face_[d] = id;
            verts.push_back(tail(d));
            darts.push_back(d);
            d = next_in_face(d);
        } while (d != d0);
        faces_.push_back(std::move(verts));
        face_darts_.push_back(std::move(darts));
    }
    for (int v = 0; v < n; ++v) isolated_ += rotation_[v].empty() ? 1 : 0;

    const int c = count_components(n, edges_);
    if (n - m + face_count() != 2 * c)
        throw GraphError("Euler violation: n - m + f = " + std::to_string(n - m + face_count()) + ", expected " + std::to_string(2 * c));

    if (faces_.empty()) {
        outer_ = 0;
        return;
    }
    if (!outer.empty()) {
        std::vector<int> rev(outer.rbegin(), outer.rend());
        outer_ = -1;
        for (int f = 0; f < static_cast<int>(faces_.size()) && outer_ < 0; ++f)
            if (same_cycle(faces_[f], outer) || same_cycle(faces_[f], rev)) outer_ = f;
        if (outer_ < 0) throw GraphError("outer face is not a traced face");
    } else {
        outer_ = 0;
        auto key = [&](int f) { return rotate_to_min(faces_[f]); };
        for (int f = 1; f < static_cast<int>(faces_.size()); ++f) {
            if (faces_[f].size() > faces_[outer_].size() ||
                (faces_[f].size() == faces_[outer_].size() && key(f) < key(outer_)))
                outer_ = f;
        }
    }
}

int PlaneGraph::next_in_face(int d) const {
    const int v = head(d);
    const auto& r = rotation_[v];
    const int i = rot_pos_[twin(d)];
    const int e = r[(i + static_cast<int>(r.size()) - 1) % static_cast<int>(r.size())];
    return dart_from(v, e);
}

std::vector<int> PlaneGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(rotation_[v].size());
    for (int e : rotation_[v]) out.push_back(other(e, v));
    return out;
}

int PlaneGraph::find_edge(int u, int v) const {
    if (u < 0 || u >= n_) return -1;
    for (int e : rotation_[u])
        if (other(e, u) == v) return e;
    return -1;
}

int RootedOrderedTree::leaf_count() const {
    int c = 0;
    for (int v = 0; v < n(); ++v) c += children[v].empty() ? 1 : 0;
    return c;
}

void RootedOrderedTree::validate() const {
    const int n = this->n();
    if (static_cast<int>(children.size()) != n) throw GraphError("children table size mismatch");
    if (root < 0 || root >= n) throw GraphError("root out of range");
    if (parent[root] != -1) throw GraphError("root has a parent");
    std::vector<int> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v != root && (parent[v] < 0 || parent[v] >= n)) throw GraphError("vertex " + std::to_string(v) + " has no parent");
        for (int c : children[v]) {
            if (c < 0 || c >= n || parent[c] != v) throw GraphError("parent/children mismatch at " + std::to_string(v));
            if (++seen[c] > 1) throw GraphError("vertex " + std::to_string(c) + " listed twice as a child");
        }
    }
    for (int v = 0; v < n; ++v)
        if (v != root && seen[v] != 1) throw GraphError("parent/children mismatch at " + std::to_string(v));
    if (static_cast<int>(preorder().size()) != n) throw GraphError("tree is not connected or has a cycle");
}

std::vector<int> RootedOrderedTree::preorder() const {
    std::vector<int> out, stack{root};
    out.reserve(n());
    std::vector<char> vis(n(), 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (vis[v]) continue;
        vis[v] = 1;
        out.push_back(v);
        for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<int> RootedOrderedTree::postorder() const {
    std::vector<int> out;
    out.reserve(n());
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < children[v].size()) {
            int c = children[v][i++];
            stack.emplace_back(c, 0);
        } else {
            out.push_back(v);
            stack.pop_back();
        }
    }
    return out;
}

RootedOrderedTree RootedOrderedTree::rerooted(int new_root) const {
    const int n = this->n();
    // Cyclic neighbour order at v: parent first, then children.
    std::vector<std::vector<int>> cyc(n);
    for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) cyc[v].push_back(parent[v]);
        cyc[v].insert(cyc[v].end(), children[v].begin(), children[v].end());
    }
    RootedOrderedTree t;
    t.root = new_root;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    std::vector<int> stack{new_root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const auto& c = cyc[v];
        std::size_t start = 0;
        if (v != new_root) start = std::find(c.begin(), c.end(), t.parent[v]) - c.begin() + 1;
        for (std::size_t k = 0; k < c.size(); ++k) {
            int u = c[(start + k) % c.size()];
            if (v != new_root && u == t.parent[v]) continue;
            t.parent[u] = v;
            t.children[v].push_back(u);
            stack.push_back(u);
        }
    }
    return t;
}

RootedOrderedTree RootedOrderedTree::from_plane_tree(const PlaneGraph& g, int root) {
    const int n = g.n();
    if (g.m() != n - 1) throw GraphError("graph is not a tree: m != n - 1");
    if (root < 0 || root >= n) throw GraphError("root out of range");
    RootedOrderedTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    std::vector<int> parent_edge(n, -1);
    std::vector<char> vis(n, 0);
    std::vector<int> stack{root};
    vis[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const auto& r = g.rotation(v);
        const int k = static_cast<int>(r.size());
        int start = parent_edge[v] < 0 ? 0 : g.rotation_index(v, parent_edge[v]) + 1;
        for (int j = 0; j < k; ++j) {
            int e = r[(start + j) % k];
            if (e == parent_edge[v]) continue;
            int u = g.other(e, v);
            if (vis[u]) throw GraphError("graph is not a tree: cycle through " + std::to_string(u));
            vis[u] = 1;
            t.parent[u] = v;
            parent_edge[u] = e;
            t.children[v].push_back(u);
            stack.push_back(u);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!vis[v]) throw GraphError("graph is not a tree: disconnected");
    return t;
}

std::vector<Edge> RootedOrderedTree::edges() const {
    std::vector<Edge> out;
    for (int v : preorder())
        for (int c : children[v]) out.push_back({v, c});
    return out;
}

std::int64_t GridDrawing::width() const {
    if (coords.empty()) return 0;
    auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(),
                                        [](const Point& a, const Point& b) { return a.x < b.x; });
    return hi->x - lo->x + 1;
}

std::int64_t GridDrawing::height() const {
    if (coords.empty()) return 0;
    auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(),
                                        [](const Point& a, const Point& b) { return a.y < b.y; });
    return hi->y - lo->y + 1;
}

void GridDrawing::validate() const {
    for (const auto& e : edges)
        if (e.u < 0 || e.v < 0 || e.u >= n() || e.v >= n() || e.u == e.v) throw GraphError("drawing edge out of range");
    std::vector<Point> pts = coords;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw GraphError("two vertices share a grid point");
}

namespace {

struct RawFile {
    int n = -1;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;
    std::vector<int> outer;
    std::optional<int> root;
};

RawFile parse_raw(std::string_view text) {
    RawFile f;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::vector<char> has_rot;
    auto fail = [&](const std::string& msg) -> void {
        throw GraphError("syntax error at line " + std::to_string(lineno) + ": " + msg);
    };
    auto read_int = [&](std::istringstream& ls, const char* what) {
        long long x;
        if (!(ls >> x)) fail(std::string("expected ") + what);
        if (x < 0 || x > (1LL << 30)) fail(std::string(what) + " out of range");
        return static_cast<int>(x);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "n") {
            if (f.n >= 0) fail("duplicate n");
            f.n = read_int(ls, "vertex count");
            f.rotation.assign(f.n, {});
            has_rot.assign(f.n, 0);
        } else if (f.n < 0) {
            fail("'n' must come first");
        } else if (key == "e") {
            int u = read_int(ls, "endpoint");
            int v = read_int(ls, "endpoint");
            f.edges.push_back({u, v});
        } else if (key == "rot") {
            int v = read_int(ls, "vertex");
            if (v >= f.n) fail("vertex out of range");
            if (has_rot[v]) fail("duplicate rotation");
            has_rot[v] = 1;
            long long e;
            while (ls >> e) {
                if (e < 0) fail("negative edge index");
                f.rotation[v].push_back(static_cast<int>(e));
            }
            if (!ls.eof()) fail("bad edge index");
            continue;
        } else if (key == "outer") {
            long long v;
            while (ls >> v) {
                if (v < 0 || v >= f.n) fail("outer vertex out of range");
                f.outer.push_back(static_cast<int>(v));
            }
            if (!ls.eof()) fail("bad outer vertex");
            continue;
        } else if (key == "root") {
            f.root = read_int(ls, "root");
        } else {
            fail("unknown record '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing token '" + extra + "'");
    }
    if (f.n < 0) throw GraphError("syntax error: missing 'n' line");
    return f;
}

}  // namespace

PlaneGraph parse_graph(std::string_view text) {
    RawFile f = parse_raw(text);
    return PlaneGraph(f.n, std::move(f.edges), std::move(f.rotation), std::move(f.outer));
}

TreeFile parse_tree(std::string_view text) {
    RawFile f = parse_raw(text);
    if (!f.root) throw GraphError("syntax error: tree file needs a 'root' line");
    TreeFile t{PlaneGraph(f.n, std::move(f.edges), std::move(f.rotation), std::move(f.outer)), *f.root};
    if (t.root >= t.graph.n()) throw GraphError("root out of range");
    if (t.graph.m() != t.graph.n() - 1) throw GraphError("graph is not a tree: m != n - 1");
    return t;
}

std::string serialize(const PlaneGraph& g) {
    std::ostringstream out;
    out << "n " << g.n() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    for (int v = 0; v < g.n(); ++v) {
        out << "rot " << v;
        for (int e : g.rotation(v)) out << ' ' << e;
        out << '\n';
    }
    if (!g.faces().empty()) {
        out << "outer";
        for (int v : g.outer_face()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string serialize(const TreeFile& t) {
    return serialize(t.graph) + "root " + std::to_string(t.root) + "\n";
}

PlaneGraph to_plane_graph(const RootedOrderedTree& t) {
    const int n = t.n();
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot(n);
    std::vector<int> up(n, -1);
    for (int v : t.preorder()) {
        if (up[v] >= 0) rot[v].push_back(up[v]);
        for (int c : t.children[v]) {
            up[c] = static_cast<int>(edges.size());
            rot[v].push_back(up[c]);
            edges.push_back({v, c});
        }
    }
    return PlaneGraph(n, std::move(edges), std::move(rot));
}

namespace {

// Reachability from the first non-removed vertex, ignoring removed vertices.
bool connected_without(const PlaneGraph& g, const std::vector<char>& removed) {
    const int n = g.n();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> vis(n, 0);
    std::vector<int> stack{start};
    vis[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.rotation(v)) {
            int u = g.other(e, v);
            if (removed[u] || vis[u]) continue;
            vis[u] = 1;
            ++reached;
            stack.push_back(u);
        }
    }
    return reached == alive;
}

// True iff the graph minus `removed` has no articulation point (iterative Tarjan).
bool biconnected_without(const PlaneGraph& g, const std::vector<char>& removed) {
    const int n = g.n();
    if (!connected_without(g, removed)) return false;
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 2) return true;
    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame { int v, parent_edge; std::size_t i; int kids; };
    std::vector<Frame> stack;
    int timer = 0;
    disc[start] = low[start] = timer++;
    stack.push_back({start, -1, 0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& r = g.rotation(f.v);
        if (f.i < r.size()) {
            int e = r[f.i++];
            int u = g.other(e, f.v);
            if (removed[u] || e == f.parent_edge) continue;
            if (disc[u] >= 0) {
                low[f.v] = std::min(low[f.v], disc[u]);
            } else {
                disc[u] = low[u] = timer++;
                ++f.kids;
                stack.push_back({u, e, 0, 0});
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.kids > 1) return false;
            } else {
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (p.v != start && low[done.v] >= disc[p.v]) return false;
            }
        }
    }
    return true;
}

}  // namespace

Connectivity check_connectivity(const PlaneGraph& g, int k, int cap) {
    if (k < 1 || k > 3) throw GraphError("connectivity order must be 1, 2 or 3");
    const int n = g.n();
    if (n > cap) return Connectivity::Unverified;
    if (n <= k) return (k == 1 && n == 1) ? Connectivity::Yes : Connectivity::No;
    std::vector<char> removed(n, 0);
    if (k == 1) return connected_without(g, removed) ? Connectivity::Yes : Connectivity::No;
    if (k == 2) return biconnected_without(g, removed) ? Connectivity::Yes : Connectivity::No;
    for (int x = 0; x < n; ++x) {
        removed[x] = 1;
        bool ok = biconnected_without(g, removed);
        removed[x] = 0;
        if (!ok) return Connectivity::No;
    }
    return Connectivity::Yes;
}

std::vector<std::vector<int>> canonical_faces(const PlaneGraph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& f : g.faces()) out.push_back(rotate_to_min(f));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace segdraw
