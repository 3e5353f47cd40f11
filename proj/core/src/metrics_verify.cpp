#include "segdraw/metrics_verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace segdraw {

__int128 cross(const Point& o, const Point& a, const Point& b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

int orientation(const Point& a, const Point& b, const Point& c) {
    __int128 v = cross(a, b, c);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

namespace {

bool in_box(const Point& p, const Point& a, const Point& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

__int128 dot(const Point& a, const Point& b) {
    return static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y;
}

Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Point primitive(Point v) {
    std::int64_t g = gcd64(v.x, v.y);
    return g ? Point{v.x / g, v.y / g} : v;
}

}  // namespace

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
    int d1 = orientation(c, d, a), d2 = orientation(c, d, b);
    int d3 = orientation(a, b, c), d4 = orientation(a, b, d);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && in_box(a, c, d)) return true;
    if (d2 == 0 && in_box(b, c, d)) return true;
    if (d3 == 0 && in_box(c, a, b)) return true;
    if (d4 == 0 && in_box(d, a, b)) return true;
    return false;
}

namespace {

// Conflict between two edges of a drawing; shared endpoints only conflict on overlap.
bool edges_conflict(const GridDrawing& g, const Edge& e, const Edge& f) {
    const Point &a = g.coords[e.u], &b = g.coords[e.v], &c = g.coords[f.u], &d = g.coords[f.v];
    int shared = -1;
    if (e.u == f.u || e.u == f.v) shared = e.u;
    if (e.v == f.u || e.v == f.v) shared = shared >= 0 ? -2 : e.v;
    if (shared == -2) return true;
    if (shared >= 0) {
        const Point& s = g.coords[shared];
        const Point& x = e.u == shared ? b : a;
        const Point& y = f.u == shared ? d : c;
        return orientation(s, x, y) == 0 && dot(sub(x, s), sub(y, s)) > 0;
    }
    return segments_touch(a, b, c, d);
}

}  // namespace

PlanarityVerdict check_planarity(const GridDrawing& d) {
    PlanarityVerdict out;
    const int n = d.n();
    const int m = static_cast<int>(d.edges.size());
    {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d.coords[a] < d.coords[b]; });
        for (int i = 0; i + 1 < n; ++i)
            if (d.coords[idx[i]] == d.coords[idx[i + 1]]) {
                out.planar = false;
                out.vertex = std::min(idx[i], idx[i + 1]);
                out.reason = "vertices " + std::to_string(idx[i]) + " and " + std::to_string(idx[i + 1]) + " coincide";
                return out;
            }
    }
    // Sweep over x-extents; the earliest pair in (edge, edge) order is reported.
    struct Item { std::int64_t lo, hi; int e; };
    std::vector<Item> items(m);
    for (int e = 0; e < m; ++e) {
        const Point &a = d.coords[d.edges[e].u], &b = d.coords[d.edges[e].v];
        items[e] = {std::min(a.x, b.x), std::max(a.x, b.x), e};
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.lo < b.lo || (a.lo == b.lo && a.e < b.e); });
    std::pair<int, int> best{m, m};
    for (int i = 0; i < m; ++i) {
        const Edge& e = d.edges[items[i].e];
        const Point &a = d.coords[e.u], &b = d.coords[e.v];
        const std::int64_t ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
        for (int j = i + 1; j < m && items[j].lo <= items[i].hi; ++j) {
            const Edge& f = d.edges[items[j].e];
            const Point &c = d.coords[f.u], &dd = d.coords[f.v];
            if (std::max(c.y, dd.y) < ylo || std::min(c.y, dd.y) > yhi) continue;
            if (edges_conflict(d, e, f)) {
                std::pair<int, int> p{std::min(items[i].e, items[j].e), std::max(items[i].e, items[j].e)};
                best = std::min(best, p);
            }
        }
    }
    // Isolated vertices lying on an edge; other vertices are caught through their own edges.
    std::pair<int, int> vbest{m, n};
    {
        std::vector<char> has_edge(n, 0);
        for (const auto& e : d.edges) has_edge[e.u] = has_edge[e.v] = 1;
        std::vector<int> idx;
        for (int v = 0; v < n; ++v)
            if (!has_edge[v]) idx.push_back(v);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d.coords[a].x < d.coords[b].x; });
        for (int e = 0; e < m; ++e) {
            const Edge& ed = d.edges[e];
            const Point &a = d.coords[ed.u], &b = d.coords[ed.v];
            const std::int64_t lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
            auto it = std::lower_bound(idx.begin(), idx.end(), lo, [&](int v, std::int64_t x) { return d.coords[v].x < x; });
            for (; it != idx.end() && d.coords[*it].x <= hi; ++it) {
                int v = *it;
                if (v == ed.u || v == ed.v) continue;
                if (orientation(a, b, d.coords[v]) == 0 && in_box(d.coords[v], a, b)) vbest = std::min(vbest, {e, v});
            }
        }
    }
    if (vbest.first < m && (vbest.first <= best.first)) {
        out.planar = false;
        out.edge_a = vbest.first;
        out.vertex = vbest.second;
        out.reason = "vertex " + std::to_string(vbest.second) + " lies on edge " + std::to_string(vbest.first);
        return out;
    }
    if (best.first < m) {
        out.planar = false;
        out.edge_a = best.first;
        out.edge_b = best.second;
        const Edge &e = d.edges[best.first], &f = d.edges[best.second];
        out.reason = "edges (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") and (" + std::to_string(f.u) + "," +
                     std::to_string(f.v) + ") intersect";
    }
    return out;
}

SegmentPartition count_segments(const GridDrawing& d) {
    const int n = d.n();
    const int m = static_cast<int>(d.edges.size());
    SegmentPartition out;
    std::vector<int> uf(m);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < m; ++e) {
        inc[d.edges[e].u].push_back(e);
        inc[d.edges[e].v].push_back(e);
    }
    for (int v = 0; v < n; ++v) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> by_dir;
        for (int e : inc[v]) {
            int u = d.edges[e].u == v ? d.edges[e].v : d.edges[e].u;
            Point p = primitive(sub(d.coords[u], d.coords[v]));
            by_dir[{p.x, p.y}].push_back(e);
        }
        for (auto& [dir, es] : by_dir) {
            if (es.size() > 1) out.overlaps += static_cast<int>(es.size()) - 1;
            auto it = by_dir.find({-dir.first, -dir.second});
            if (it == by_dir.end() || es.size() != 1 || it->second.size() != 1) continue;
            int a = find(es[0]), b = find(it->second[0]);
            if (a != b) uf[a] = b;
        }
    }
    out.segment_of_edge.assign(m, -1);
    std::vector<int> id(m, -1);
    for (int e = 0; e < m; ++e) {
        int r = find(e);
        if (id[r] < 0) id[r] = out.count++;
        out.segment_of_edge[e] = id[r];
    }
    // Recover each segment as a vertex path.
    std::vector<std::vector<int>> members(out.count);
    for (int e = 0; e < m; ++e) members[out.segment_of_edge[e]].push_back(e);
    out.paths.resize(out.count);
    for (int s = 0; s < out.count; ++s) {
        std::map<int, int> deg;
        std::map<int, std::vector<int>> adj;
        for (int e : members[s]) {
            ++deg[d.edges[e].u];
            ++deg[d.edges[e].v];
            adj[d.edges[e].u].push_back(d.edges[e].v);
            adj[d.edges[e].v].push_back(d.edges[e].u);
        }
        int start = members[s].empty() ? -1 : d.edges[members[s][0]].u;
        for (auto& [v, k] : deg)
            if (k == 1) {
                start = v;
                break;
            }
        std::vector<int> path{start};
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) {
                    next = w;
                    break;
                }
            if (next < 0 || next == start) break;
            path.push_back(next);
            prev = cur;
            cur = next;
            if (path.size() > members[s].size() + 1) break;
        }
        out.paths[s] = std::move(path);
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "unchecked";
    }
}

namespace {

// Smallest closed cone [lo, hi] (ccw from lo to hi, angle < pi) holding every direction so far.
struct Cone {
    Point lo, hi;
    bool empty = true;

    static bool strictly_ccw(const Point& a, const Point& b) { return cross({0, 0}, a, b) > 0; }
    static bool same_dir(const Point& a, const Point& b) { return cross({0, 0}, a, b) == 0 && dot(a, b) > 0; }

    bool add(const Point& d) {
        if (empty) {
            lo = hi = d;
            empty = false;
            return true;
        }
        bool after_lo = strictly_ccw(lo, d) || same_dir(lo, d);
        bool before_hi = strictly_ccw(d, hi) || same_dir(d, hi);
        if (after_lo && before_hi) return true;
        if (strictly_ccw(lo, d) && strictly_ccw(hi, d)) {
            hi = d;
            return true;
        }
        if (strictly_ccw(d, hi) && strictly_ccw(d, lo)) {
            lo = d;
            return true;
        }
        return false;
    }
};

}  // namespace

bool directions_monotone(const std::vector<Point>& dirs) {
    Cone c;
    for (const auto& d : dirs) {
        if (d.x == 0 && d.y == 0) return false;
        if (!c.add(d)) return false;
    }
    return true;
}

MonotoneVerdict check_monotone(const GridDrawing& d, int cap) {
    MonotoneVerdict out;
    const int n = d.n();
    if (n > cap) return out;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : d.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (int s = 0; s < n; ++s) {
        std::vector<char> reached(n, 0), on_path(n, 0);
        reached[s] = 1;
        on_path[s] = 1;
        struct Frame { int v; std::size_t i; Cone cone; };
        std::vector<Frame> stack{{s, 0, Cone{}}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.i >= adj[f.v].size()) {
                on_path[f.v] = 0;
                stack.pop_back();
                continue;
            }
            int u = adj[f.v][f.i++];
            if (on_path[u]) continue;
            Cone c = f.cone;
            if (!c.add(sub(d.coords[u], d.coords[f.v]))) continue;
            reached[u] = 1;
            on_path[u] = 1;
            stack.push_back({u, 0, c});
        }
        for (int t = 0; t < n; ++t)
            if (!reached[t]) {
                out.verdict = Verdict::No;
                out.from = s;
                out.to = t;
                return out;
            }
    }
    out.verdict = Verdict::Yes;
    return out;
}

int LowerBounds::max() const { return std::max({odd_half, max_half_degree, density}); }

LowerBounds lower_bounds(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    LowerBounds b;
    int odd = 0;
    for (int v = 0; v < n; ++v) {
        odd += deg[v] % 2;
        b.max_half_degree = std::max(b.max_half_degree, (deg[v] + 1) / 2);
    }
    b.odd_half = odd / 2;
    const int m = static_cast<int>(edges.size());
    b.density = n >= 2 ? (m + n - 2) / (n - 1) : 0;
    return b;
}

LowerBounds lower_bounds(const PlaneGraph& g) { return lower_bounds(g.n(), g.edges()); }

std::string SegmentReport::to_key_values() const {
    std::ostringstream out;
    out << "segments=" << segment_count << '\n'
        << "lower_bounds=" << bounds.odd_half << ',' << bounds.max_half_degree << ',' << bounds.density << '\n'
        << "width=" << width << '\n'
        << "height=" << height << '\n'
        << "planar=" << (planar ? "yes" : "no") << '\n'
        << "monotone=" << to_string(monotone) << '\n';
    if (!planar) out << "planarity_witness=" << planarity_witness << '\n';
    return out.str();
}

std::string SegmentReport::summary_line() const {
    std::ostringstream out;
    out << "segments=" << segment_count << " lower_bounds=" << bounds.odd_half << ',' << bounds.max_half_degree << ','
        << bounds.density << " width=" << width << " height=" << height << " planar=" << (planar ? "yes" : "no")
        << " monotone=" << to_string(monotone);
    return out.str();
}

SegmentReport make_report(const GridDrawing& d, int monotone_cap) {
    SegmentReport r;
    auto seg = count_segments(d);
    r.segment_count = seg.count;
    r.segment_of_edge = std::move(seg.segment_of_edge);
    r.bounds = lower_bounds(d.n(), d.edges);
    r.width = d.width();
    r.height = d.height();
    auto pv = check_planarity(d);
    r.planar = pv.planar && seg.overlaps == 0;
    r.planarity_witness = pv.planar ? (seg.overlaps ? "overlapping collinear edges" : "") : pv.reason;
    r.monotone = check_monotone(d, monotone_cap).verdict;
    return r;
}

}  // namespace segdraw
