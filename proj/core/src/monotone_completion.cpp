#include "segdraw/monotone_completion.hpp"

#include <algorithm>
#include <numeric>

namespace segdraw {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw GraphError("unconverged: coordinate overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw GraphError("unconverged: coordinate overflow");
    return r;
}

std::vector<int> non_tree_edges(const PlaneGraph& g, const RootedOrderedTree& t) {
    std::vector<int> out;
    for (int e = 0; e < g.m(); ++e) {
        const auto [u, v] = g.edge(e);
        if (t.parent[u] != v && t.parent[v] != u) out.push_back(e);
    }
    return out;
}

bool pair_conflicts(const GridDrawing& d, const PlanarityVerdict& w) {
    if (w.edge_b < 0) {
        const auto& e = d.edges[w.edge_a];
        const Point& p = d.coords[w.vertex];
        return segments_touch(p, p, d.coords[e.u], d.coords[e.v]);
    }
    const Edge pair[2] = {d.edges[w.edge_a], d.edges[w.edge_b]};
    // Keep the pair's endpoints only, so no unrelated vertex counts as isolated.
    GridDrawing local;
    std::vector<int> id(d.n(), -1);
    for (const auto& e : pair)
        for (int v : {e.u, e.v})
            if (id[v] < 0) {
                id[v] = local.n();
                local.coords.push_back(d.coords[v]);
            }
    for (const auto& e : pair) local.edges.push_back({id[e.u], id[e.v]});
    return !check_planarity(local).planar;
}

}  // namespace

std::vector<std::int64_t> region_x(const PlaneGraph& g, const SchnyderRealizer& r, int k) {
    const int n = g.n(), m = g.m();
    const int outer = g.outer_face_index();
    const std::int64_t F = static_cast<std::int64_t>(g.faces().size()) - 1;
    std::vector<char> outer_edge(m, 0);
    for (int d : g.face_darts()[outer]) outer_edge[edge_of_dart(d)] = 1;
    std::vector<int> stamp(m, -1), seen(g.faces().size(), -1);
    std::vector<std::int64_t> x(n, 0);
    const int kp = next_tree(k), km = prev_tree(k);
    for (int v = 0; v < n; ++v) {
        if (v == r.root(k)) continue;
        const int up = r.parent(v, kp);
        if (up < 0) {
            x[v] = F;
            continue;
        }
        const int start = g.face_of_dart(g.dart_from(v, g.find_edge(v, up)));
        if (start == outer) {
            x[v] = F;
            continue;
        }
        for (int c : {kp, km})
            for (int a = v, b = r.parent(v, c); b >= 0; a = b, b = r.parent(b, c)) stamp[g.find_edge(a, b)] = v;
        std::vector<int> stack{start};
        seen[start] = v;
        std::int64_t size = 0;
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            ++size;
            for (int d : g.face_darts()[f]) {
                const int e = edge_of_dart(d);
                if (outer_edge[e] || stamp[e] == v) continue;
                const int h = g.face_of_dart(twin(d));
                if (seen[h] != v) {
                    seen[h] = v;
                    stack.push_back(h);
                }
            }
        }
        x[v] = F - size;
    }
    return x;
}

GridDrawing apply_plan(const PlaneGraph& g, const RootedOrderedTree& t, const GridDrawing& base,
                       const StretchPlan& plan) {
    GridDrawing d;
    d.coords.assign(g.n(), {});
    d.edges = g.edges();
    for (int v : t.preorder()) {
        if (v == t.root) continue;
        const int p = t.parent[v];
        const Point dir{base.coords[v].x - base.coords[p].x, base.coords[v].y - base.coords[p].y};
        d.coords[v] = {checked_add(d.coords[p].x, checked_mul(plan.factor[v], dir.x)),
                       checked_add(d.coords[p].y, checked_mul(plan.factor[v], dir.y))};
    }
    return d;
}

StretchPlan plan_stretch(const PlaneGraph& g, const RootedOrderedTree& t, const GridDrawing& base,
                         const StretchOptions& opt) {
    const int n = g.n();
    StretchPlan plan;
    plan.insertion_order = non_tree_edges(g, t);
    plan.factor.assign(n, 1);
    plan.factor[t.root] = 0;
    if (plan.insertion_order.empty()) {
        plan.method = StretchMethod::Iterative;
        return plan;
    }

    if (opt.realizer) {
        const auto x = region_x(g, *opt.realizer, opt.tree);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (v != t.root) {
                plan.factor[v] = x[v] - x[t.parent[v]];
                ok = plan.factor[v] > 0;
            }
        if (ok && check_planarity(apply_plan(g, t, base, plan)).planar) {
            plan.method = StretchMethod::Region;
            return plan;
        }
        plan.factor.assign(n, 1);
        plan.factor[t.root] = 0;
    }
    if (!opt.allow_iterative) throw GraphError("unconverged: region plan rejected and iterative scheme disabled");

    plan.method = StretchMethod::Iterative;
    const int cap = opt.cap > 0 ? opt.cap : 8 * n;
    for (plan.rounds = 0; plan.rounds < cap; ++plan.rounds) {
        const GridDrawing d = apply_plan(g, t, base, plan);
        const PlanarityVerdict w = check_planarity(d);
        if (w.planar) return plan;
        if (w.edge_a < 0) throw GraphError("unconverged: coincident vertices (" + w.reason + ")");
        // Stretching the tree edge into a witness endpoint translates its subtree along that edge.
        std::vector<int> cand{d.edges[w.edge_a].u, d.edges[w.edge_a].v};
        if (w.edge_b >= 0) {
            cand.push_back(d.edges[w.edge_b].u);
            cand.push_back(d.edges[w.edge_b].v);
        } else {
            cand.push_back(w.vertex);
        }
        bool cleared = false;
        for (std::int64_t c = 2; c <= 16 && !cleared; ++c)
            for (int z : cand) {
                if (z == t.root) continue;
                StretchPlan trial = plan;
                trial.factor[z] = checked_mul(trial.factor[z], c);
                if (!pair_conflicts(apply_plan(g, t, base, trial), w)) {
                    plan = std::move(trial);
                    cleared = true;
                    break;
                }
            }
        if (!cleared) throw GraphError("unconverged: no factor up to 16 clears the witness (" + w.reason + ")");
    }
    throw GraphError("unconverged: no planar stretch within " + std::to_string(cap) + " rounds");
}

void normalize_gcd(GridDrawing& d) {
    if (d.coords.empty()) return;
    const Point o = d.coords[0];
    std::int64_t g = 0;
    for (const auto& p : d.coords) g = std::gcd(g, std::gcd(p.x - o.x, p.y - o.y));
    if (g <= 1) return;
    for (auto& p : d.coords) p = {o.x + (p.x - o.x) / g, o.y + (p.y - o.y) / g};
}

bool slopes_preserved(const RootedOrderedTree& t, const GridDrawing& base, const GridDrawing& stretched) {
    for (int v = 0; v < t.n(); ++v) {
        if (v == t.root) continue;
        const int p = t.parent[v];
        const Point a{base.coords[v].x - base.coords[p].x, base.coords[v].y - base.coords[p].y};
        const Point b{stretched.coords[v].x - stretched.coords[p].x, stretched.coords[v].y - stretched.coords[p].y};
        const Point zero{0, 0};
        if (cross(zero, a, b) != 0) return false;
        if (static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y <= 0) return false;
    }
    return true;
}

Completion complete_drawing(const PlaneGraph& g, const RootedOrderedTree& t, const GridDrawing& base,
                            const StretchOptions& opt, int monotone_cap) {
    Completion c;
    c.plan = plan_stretch(g, t, base, opt);
    c.drawing = apply_plan(g, t, base, c.plan);
    normalize_gcd(c.drawing);
    c.lambda = t.leaf_count();
    c.slopes_preserved = slopes_preserved(t, base, c.drawing);
    c.report = make_report(c.drawing, monotone_cap);
    if (!c.report.planar) throw GraphError("unconverged: completed drawing is not planar");
    return c;
}

ThreeConnectedDrawing draw_three_connected(const PlaneGraph& g, int monotone_cap, int stretch_cap) {
    ThreeConnectedDrawing out;
    out.realizer = compute_realizer(g);
    out.census = leaf_census(out.realizer);
    out.tree = min_leaf_tree(out.realizer);
    const auto& t = out.realizer.tree(out.tree);
    out.orderly = check_orderly(g, t);
    out.base = draw_slope_disjoint(t, assign_slopes(t));
    StretchOptions opt;
    opt.cap = stretch_cap;
    opt.realizer = &out.realizer;
    opt.tree = out.tree;
    out.completion = complete_drawing(g, t, out.base, opt, monotone_cap);
    return out;
}

}  // namespace segdraw
