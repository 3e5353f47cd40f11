#include "segdraw/schnyder_realizer.hpp"

#include <algorithm>
#include <sstream>

namespace segdraw {

namespace {

struct Step {
    std::vector<int> chain;
    int cp = -1;
    int cq = -1;
};

bool on_face(const PlaneGraph& g, int f, int v) {
    const auto& fv = g.faces()[f];
    return std::find(fv.begin(), fv.end(), v) != fv.end();
}

// Removal order from the top: the contour runs v1 .. v2 along the outer boundary of the
// present graph and every step removes a singleton or a chain of degree-2 contour vertices.
class CanonicalOrder {
public:
    CanonicalOrder(const PlaneGraph& g, int v1, int v2, int v3, const std::vector<int>& ccw)
        : g_(g), present_(g.n(), 1), on_contour_(g.n(), 0), pdeg_(g.n()), vfaces_(g.n()) {
        const int nf = static_cast<int>(g.faces().size());
        missing_.assign(nf, 0);
        oncont_.assign(nf, 0);
        for (int v = 0; v < g.n(); ++v) {
            pdeg_[v] = g.degree(v);
            for (int e : g.rotation(v)) {
                const int f = g.face_of_dart(g.dart_from(v, e));
                if (f == g.outer_face_index()) continue;
                if (std::find(vfaces_[v].begin(), vfaces_[v].end(), f) == vfaces_[v].end()) vfaces_[v].push_back(f);
            }
        }
        contour_.push_back(v1);
        for (std::size_t i = ccw.size(); i-- > 3;) contour_.push_back(ccw[i]);
        contour_.push_back(v3);
        contour_.push_back(v2);
        for (int v : contour_) set_on_contour(v);
    }

    std::vector<Step> run() {
        remove(static_cast<int>(contour_.size()) - 2, static_cast<int>(contour_.size()) - 2);
        while (contour_.size() > 2) {
            if (!step()) throw GraphError("canonical ordering stuck; graph is not 3-connected");
        }
        return std::move(steps_);
    }

private:
    void set_on_contour(int v) {
        on_contour_[v] = 1;
        for (int f : vfaces_[v]) ++oncont_[f];
    }

    int neighbor(int v, int idx) const {
        const auto& rot = g_.rotation(v);
        return g_.other(rot[idx], v);
    }

    // Next vertex on the outer boundary of the present graph after arriving at b from a.
    int next_on_boundary(int a, int b) const {
        const int deg = g_.degree(b);
        int idx = g_.rotation_index(b, g_.find_edge(a, b));
        for (int s = 0; s < deg; ++s) {
            idx = (idx + deg - 1) % deg;
            const int c = neighbor(b, idx);
            if (present_[c]) return c;
        }
        throw GraphError("boundary walk failed");
    }

    void remove(int i0, int i1) {
        Step st;
        st.chain.assign(contour_.begin() + i0, contour_.begin() + i1 + 1);
        st.cp = contour_[i0 - 1];
        st.cq = contour_[i1 + 1];
        for (int z : st.chain) {
            present_[z] = 0;
            on_contour_[z] = 0;
            for (int f : vfaces_[z]) {
                ++missing_[f];
                --oncont_[f];
            }
            for (int e : g_.rotation(z)) --pdeg_[g_.other(e, z)];
        }
        int a = i0 >= 2 ? contour_[i0 - 2] : contour_.back();
        int b = st.cp;
        std::vector<int> fresh;
        for (int c = next_on_boundary(a, b); c != st.cq; c = next_on_boundary(a, b)) {
            fresh.push_back(c);
            set_on_contour(c);
            a = b;
            b = c;
        }
        contour_.erase(contour_.begin() + i0, contour_.begin() + i1 + 1);
        contour_.insert(contour_.begin() + i0, fresh.begin(), fresh.end());
        steps_.push_back(std::move(st));
    }

    bool step() {
        const int len = static_cast<int>(contour_.size());
        int i = 1;
        while (i < len - 1) {
            const int v = contour_[i];
            if (pdeg_[v] >= 3) {
                bool ok = g_.degree(v) > pdeg_[v];
                const int cp = contour_[i - 1], cq = contour_[i + 1];
                for (int f : vfaces_[v]) {
                    if (!ok) break;
                    if (missing_[f]) continue;
                    const int expect = 1 + on_face(g_, f, cp) + on_face(g_, f, cq);
                    ok = oncont_[f] == expect;
                }
                if (ok) {
                    remove(i, i);
                    return true;
                }
                ++i;
                continue;
            }
            int j = i;
            while (j + 1 < len - 1 && pdeg_[contour_[j + 1]] == 2) ++j;
            int face = -1;
            for (int f : vfaces_[v])
                if (!missing_[f]) {
                    face = f;
                    break;
                }
            bool ok = face >= 0 && oncont_[face] == j - i + 3;
            for (int t = i; ok && t <= j; ++t) ok = g_.degree(contour_[t]) > 2;
            if (ok) {
                remove(i, j);
                return true;
            }
            i = j + 1;
        }
        return false;
    }

    const PlaneGraph& g_;
    std::vector<char> present_;
    std::vector<char> on_contour_;
    std::vector<int> pdeg_;
    std::vector<std::vector<int>> vfaces_;
    std::vector<int> missing_;
    std::vector<int> oncont_;
    std::vector<int> contour_;
    std::vector<Step> steps_;
};

class Labeler {
public:
    Labeler(const PlaneGraph& g, SchnyderRealizer& r) : g_(g), r_(r) {}

    int label(int u, int v) const {
        const int e = g_.find_edge(u, v);
        return e < 0 ? 0 : r_.dart_label[g_.dart_from(u, e)];
    }

    void set(int u, int v, int k) {
        if (r_.out[u][k - 1] >= 0) throw GraphError("realizer labelling assigns two outgoing edges of one colour");
        r_.dart_label[g_.dart_from(u, g_.find_edge(u, v))] = k;
        r_.out[u][k - 1] = v;
    }

private:
    const PlaneGraph& g_;
    SchnyderRealizer& r_;
};

std::vector<int> ccw_outer(const PlaneGraph& g) {
    std::vector<int> ccw(g.outer_face().rbegin(), g.outer_face().rend());
    std::rotate(ccw.begin(), std::min_element(ccw.begin(), ccw.end()), ccw.end());
    return ccw;
}

}  // namespace

int outer_predecessor(const PlaneGraph& g, int v) {
    const auto& o = g.outer_face();
    const int L = static_cast<int>(o.size());
    for (int t = 0; t < L; ++t)
        if (o[t] == v) return o[(t + L - 1) % L];
    return -1;
}

SchnyderRealizer compute_realizer(const PlaneGraph& g) {
    if (check_connectivity(g, 3) == Connectivity::No) throw GraphError("graph is not 3-connected");
    const auto ccw = ccw_outer(g);
    if (ccw.size() < 3) throw GraphError("outer face has fewer than 3 vertices");
    const int v1 = ccw[0], v2 = ccw[1], v3 = ccw[2];

    SchnyderRealizer r;
    r.roots = {v1, v2, v3};
    r.dart_label.assign(2 * g.m(), 0);
    r.out.assign(g.n(), {-1, -1, -1});

    const auto steps = CanonicalOrder(g, v1, v2, v3, ccw).run();

    Labeler lab(g, r);
    lab.set(v1, v2, 2);
    lab.set(v2, v1, 1);
    std::vector<int> cont{v1, v2};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const auto& z = it->chain;
        const int i0 = static_cast<int>(std::find(cont.begin(), cont.end(), it->cp) - cont.begin());
        const int i1 = static_cast<int>(std::find(cont.begin(), cont.end(), it->cq) - cont.begin());
        lab.set(z.front(), it->cp, 1);
        lab.set(z.back(), it->cq, 2);
        for (std::size_t t = 0; t + 1 < z.size(); ++t) {
            lab.set(z[t + 1], z[t], 1);
            lab.set(z[t], z[t + 1], 2);
        }
        for (int idx = i0 + 1; idx < i1; ++idx) {
            const int x = cont[idx];
            if (z.size() == 1 && g.find_edge(x, z[0]) >= 0) {
                lab.set(x, z[0], 3);
                continue;
            }
            const int left = cont[idx - 1], right = cont[idx + 1];
            if (lab.label(right, x) == 1 && r.out[x][1] != right)
                lab.set(x, right, 3);
            else if (lab.label(left, x) == 2 && r.out[x][0] != left)
                lab.set(x, left, 3);
            else
                throw GraphError("no outgoing 3-edge for vertex " + std::to_string(x));
        }
        cont.erase(cont.begin() + i0 + 1, cont.begin() + i1);
        cont.insert(cont.begin() + i0 + 1, z.begin(), z.end());
    }
    const int i3 = static_cast<int>(std::find(cont.begin(), cont.end(), v3) - cont.begin());
    for (int i = 0; i < static_cast<int>(cont.size()); ++i) {
        if (i < i3) lab.set(cont[i], cont[i + 1], 3);
        if (i > i3) lab.set(cont[i], cont[i - 1], 3);
    }

    build_trees(g, r);
    const auto errs = validate_realizer(g, r);
    if (!errs.empty())
        throw GraphError("computed realizer is invalid at vertex " + std::to_string(errs[0].vertex) + ": " +
                         errs[0].kind);
    return r;
}

void build_trees(const PlaneGraph& g, SchnyderRealizer& r) {
    const int n = g.n();
    r.out.assign(n, {-1, -1, -1});
    for (int d = 0; d < 2 * g.m(); ++d)
        if (r.dart_label[d]) r.out[g.tail(d)][r.dart_label[d] - 1] = g.head(d);
    for (int k = 1; k <= 3; ++k) {
        auto& t = r.trees[k - 1];
        t.root = r.root(k);
        t.parent.assign(n, -1);
        t.children.assign(n, {});
        for (int v = 0; v < n; ++v) {
            if (v != t.root) t.parent[v] = r.parent(v, k);
            const auto& rot = g.rotation(v);
            const int deg = static_cast<int>(rot.size());
            int start;
            if (v == t.root) {
                const int a = outer_predecessor(g, v);
                start = a < 0 ? 0 : g.rotation_index(v, g.find_edge(v, a));
            } else {
                const int e = t.parent[v] < 0 ? -1 : g.find_edge(v, t.parent[v]);
                start = e < 0 ? 0 : g.rotation_index(v, e) + 1;
            }
            for (int s = 0; s < deg; ++s) {
                const int e = rot[(start + s) % deg];
                const int u = g.other(e, v);
                if (u != t.root && r.parent(u, k) == v && r.dart_label[g.dart_from(u, e)] == k)
                    t.children[v].push_back(u);
            }
        }
    }
}

SchnyderRealizer parse_realizer(const PlaneGraph& g, std::string_view text) {
    SchnyderRealizer r;
    const auto ccw = ccw_outer(g);
    if (ccw.size() >= 3) r.roots = {ccw[0], ccw[1], ccw[2]};
    r.dart_label.assign(2 * g.m(), 0);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto fail = [&](const std::string& why) {
            throw GraphError("realizer line " + std::to_string(lineno) + ": " + why);
        };
        if (tok == "roots") {
            for (auto& x : r.roots)
                if (!(ls >> x) || x < 0 || x >= g.n()) fail("bad root");
            continue;
        }
        int k = 0, u = 0, v = 0;
        try {
            k = std::stoi(tok);
        } catch (const std::exception&) {
            fail("expected a label");
        }
        if (k < 1 || k > 3 || !(ls >> u >> v)) fail("expected `k u v`");
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) fail("vertex out of range");
        const int e = g.find_edge(u, v);
        if (e < 0) fail("no edge " + std::to_string(u) + "-" + std::to_string(v));
        r.dart_label[g.dart_from(u, e)] = k;
    }
    build_trees(g, r);
    return r;
}

std::string serialize(const PlaneGraph& g, const SchnyderRealizer& r) {
    std::ostringstream os;
    os << "roots " << r.roots[0] << ' ' << r.roots[1] << ' ' << r.roots[2] << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int k = 1; k <= 3; ++k)
            for (int e : g.rotation(u))
                if (r.dart_label[g.dart_from(u, e)] == k) os << k << ' ' << u << ' ' << g.other(e, u) << '\n';
    return os.str();
}

std::vector<RealizerViolation> validate_realizer(const PlaneGraph& g, const SchnyderRealizer& r) {
    std::vector<RealizerViolation> errs;
    const int n = g.n();
    auto add = [&](int v, std::string kind, std::string detail = {}) {
        errs.push_back({v, std::move(kind), std::move(detail)});
    };
    if (static_cast<int>(r.dart_label.size()) != 2 * g.m()) {
        add(-1, "size", "label count does not match the edge count");
        return errs;
    }
    for (int k = 0; k < 3; ++k)
        if (r.roots[k] < 0 || r.roots[k] >= n) {
            add(-1, "root", "root out of range");
            return errs;
        }

    std::vector<std::array<int, 3>> outs(n, {-1, -1, -1});
    for (int d = 0; d < 2 * g.m(); ++d) {
        const int k = r.dart_label[d];
        if (k == 0) continue;
        if (k < 1 || k > 3) {
            add(g.tail(d), "label", "label outside 1..3");
            continue;
        }
        if (outs[g.tail(d)][k - 1] >= 0) add(g.tail(d), "duplicate-out", "two outgoing " + std::to_string(k) + "-edges");
        outs[g.tail(d)][k - 1] = d;
    }
    for (int e = 0; e < g.m(); ++e) {
        const int a = r.dart_label[2 * e], b = r.dart_label[2 * e + 1];
        if (!a && !b) add(g.edge(e).u, "unlabelled-edge", "edge to " + std::to_string(g.edge(e).v));
        if (a && a == b) add(g.edge(e).u, "bidirected-same-tree", "edge to " + std::to_string(g.edge(e).v));
    }
    if (!errs.empty()) return errs;

    for (int v = 0; v < n; ++v) {
        int own = 0;
        for (int k = 1; k <= 3; ++k)
            if (r.root(k) == v) own = k;
        for (int k = 1; k <= 3; ++k) {
            if (k == own && outs[v][k - 1] >= 0) add(v, "root-out", "root has an outgoing own-tree edge");
            if (k != own && outs[v][k - 1] < 0) add(v, "missing-out", "no outgoing " + std::to_string(k) + "-edge");
        }
        // (out label, in label) in ccw order; a root gets a virtual out-edge at its outer corner.
        std::vector<std::pair<int, int>> tags;
        for (int e : g.rotation(v)) {
            const int d = g.dart_from(v, e);
            tags.emplace_back(r.dart_label[d], r.dart_label[twin(d)]);
        }
        if (own) {
            const int a = outer_predecessor(g, v);
            const int j = a < 0 ? 0 : g.rotation_index(v, g.find_edge(v, a));
            tags.insert(tags.begin() + j, {own, 0});
        }
        std::array<int, 3> pos{-1, -1, -1};
        for (int i = 0; i < static_cast<int>(tags.size()); ++i)
            if (tags[i].first) pos[tags[i].first - 1] = i;
        if (std::count(pos.begin(), pos.end(), -1)) continue;
        const int deg = static_cast<int>(tags.size());
        auto dist = [deg](int a, int b) { return ((b - a) % deg + deg) % deg; };
        if (dist(pos[0], pos[1]) >= dist(pos[0], pos[2])) {
            add(v, "out-order", "outgoing edges are not in ccw order 1, 2, 3");
            continue;
        }
        for (int i = 0; i < deg; ++i) {
            const auto [o, j] = tags[i];
            if (!j) continue;
            if (o) {
                if (o != next_tree(j) && o != prev_tree(j))
                    add(v, "bidirected-misplaced", "in-" + std::to_string(j) + " edge is outgoing " + std::to_string(o));
                continue;
            }
            const int lo = pos[next_tree(j) - 1], hi = pos[prev_tree(j) - 1];
            const int t = dist(lo, i);
            if (t <= 0 || t >= dist(lo, hi))
                add(v, "in-edge-misplaced",
                    "incoming " + std::to_string(j) + "-edge outside the sector between outgoing " +
                        std::to_string(next_tree(j)) + " and " + std::to_string(prev_tree(j)));
        }
    }

    for (int k = 1; k <= 3; ++k) {
        std::vector<char> state(n, 0);
        state[r.root(k)] = 2;
        for (int v = 0; v < n; ++v) {
            std::vector<int> walk;
            int x = v;
            while (state[x] == 0) {
                state[x] = 1;
                walk.push_back(x);
                const int d = outs[x][k - 1];
                if (d < 0) break;
                x = g.head(d);
            }
            const bool bad = state[x] == 1;
            if (bad) add(v, "tree", "T" + std::to_string(k) + " has a cycle or misses its root");
            for (int w : walk) state[w] = bad ? 3 : 2;
            if (bad) break;
        }
    }
    return errs;
}

LeafFaceAssignment assign_leaves_to_faces(const PlaneGraph& g, const SchnyderRealizer& r) {
    LeafFaceAssignment a;
    a.by_face.assign(g.faces().size(), {});
    a.roots = r.roots;
    for (int k = 1; k <= 3; ++k) {
        const auto& t = r.tree(k);
        for (int v = 0; v < g.n(); ++v) {
            if (v == r.root(k) || !t.is_leaf(v)) continue;
            const int u = r.parent(v, next_tree(k));
            const int f = u < 0 ? g.outer_face_index() : g.face_of_dart(g.dart_from(v, g.find_edge(v, u)));
            a.by_face[f].push_back(static_cast<int>(a.pairs.size()));
            a.pairs.push_back({v, k, f});
        }
    }
    return a;
}

FaceAssignmentCheck check_face_assignment(const PlaneGraph& g, const LeafFaceAssignment& a) {
    FaceAssignmentCheck c;
    std::vector<int> tree_at(g.n(), 0);
    for (int f = 0; f < static_cast<int>(a.by_face.size()); ++f) {
        const auto& fv = g.faces()[f];
        const int deg = static_cast<int>(fv.size());
        const auto& ids = a.by_face[f];
        const bool outer = f == g.outer_face_index();
        const int count = static_cast<int>(ids.size());
        if (count > (outer ? deg + 3 : deg - 2)) c.per_face_caps = false;
        for (int id : ids) {
            auto& slot = tree_at[a.pairs[id].vertex];
            const bool root = std::find(a.roots.begin(), a.roots.end(), a.pairs[id].vertex) != a.roots.end();
            if (slot && !(outer && root)) c.no_duplicates = false;
            slot = a.pairs[id].tree;
        }
        if (!outer) {
            if (count > deg - 2) c.two_unassigned = false;
            for (int i = 0; i < deg; ++i) {
                const int x = tree_at[fv[i]], y = tree_at[fv[(i + 1) % deg]];
                if (x && y && x != y) c.consecutive_same_tree = false;
            }
        }
        for (int id : ids) tree_at[a.pairs[id].vertex] = 0;
    }
    return c;
}

std::array<int, 3> leaf_census(const SchnyderRealizer& r) {
    return {r.trees[0].leaf_count(), r.trees[1].leaf_count(), r.trees[2].leaf_count()};
}

int min_leaf_tree(const SchnyderRealizer& r) {
    const auto c = leaf_census(r);
    return static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin()) + 1;
}

const RootedOrderedTree& pick_min_leaf_tree(const SchnyderRealizer& r) { return r.tree(min_leaf_tree(r)); }

}  // namespace segdraw
