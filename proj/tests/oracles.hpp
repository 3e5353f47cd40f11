#pragma once

// Brute-force checks written without the library's geometry code.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "segdraw/graph_model.hpp"

namespace oracle {

using segdraw::Edge;
using segdraw::GridDrawing;
using segdraw::Point;

inline int sgn(__int128 v) { return (v > 0) - (v < 0); }

inline __int128 orient(const Point& a, const Point& b, const Point& c) {
    return static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

inline bool on_closed(const Point& p, const Point& a, const Point& b) {
    return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool closed_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = sgn(orient(a, b, c)), o2 = sgn(orient(a, b, d));
    const int o3 = sgn(orient(c, d, a)), o4 = sgn(orient(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_closed(c, a, b) || on_closed(d, a, b) || on_closed(a, c, d) || on_closed(b, c, d);
}

/// O(m^2 + nm) planarity: adjacent edges may only share their common endpoint and must not overlap.
inline bool planar(const GridDrawing& d) {
    const auto& p = d.coords;
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j)
            if (p[i] == p[j]) return false;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const auto [a, b] = d.edges[i];
        for (int v = 0; v < d.n(); ++v)
            if (v != a && v != b && on_closed(p[v], p[a], p[b])) return false;
        for (std::size_t j = i + 1; j < d.edges.size(); ++j) {
            const auto [c, e] = d.edges[j];
            const int shared = (a == c || a == e) ? a : (b == c || b == e) ? b : -1;
            if (shared < 0) {
                if (closed_intersect(p[a], p[b], p[c], p[e])) return false;
                continue;
            }
            const int x = shared == a ? b : a, y = shared == c ? e : c;
            if (x == y) return false;
            // Same ray from the shared vertex means overlap.
            const Point u{p[x].x - p[shared].x, p[x].y - p[shared].y};
            const Point w{p[y].x - p[shared].x, p[y].y - p[shared].y};
            const __int128 cr = static_cast<__int128>(u.x) * w.y - static_cast<__int128>(u.y) * w.x;
            const __int128 dot = static_cast<__int128>(u.x) * w.x + static_cast<__int128>(u.y) * w.y;
            if (cr == 0 && dot > 0) return false;
        }
    }
    return true;
}

inline Point primitive(Point v) {
    const std::int64_t g = std::gcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

/// Segments = m minus the number of opposite direction pairs at vertices.
inline int segments_by_degree_sum(const GridDrawing& d) {
    std::vector<std::map<std::pair<std::int64_t, std::int64_t>, int>> dirs(d.n());
    for (const auto& [u, v] : d.edges) {
        const Point a = primitive({d.coords[v].x - d.coords[u].x, d.coords[v].y - d.coords[u].y});
        ++dirs[u][{a.x, a.y}];
        ++dirs[v][{-a.x, -a.y}];
    }
    int pairs = 0;
    for (const auto& m : dirs)
        for (const auto& [k, c] : m)
            if (k > std::make_pair(std::int64_t{0}, std::int64_t{0})) {
                const auto it = m.find({-k.first, -k.second});
                if (it != m.end()) pairs += std::min(c, it->second);
            }
    return static_cast<int>(d.edges.size()) - pairs;
}

/// Vectors fit in an open half-plane iff the origin is not in their convex hull.
inline bool open_half_plane(const std::vector<Point>& v) {
    const Point o{0, 0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == o) return false;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (orient(o, v[i], v[j]) == 0 &&
                static_cast<__int128>(v[i].x) * v[j].x + static_cast<__int128>(v[i].y) * v[j].y < 0)
                return false;
            for (std::size_t k = j + 1; k < v.size(); ++k) {
                const int a = sgn(orient(v[i], v[j], o)), b = sgn(orient(v[j], v[k], o)), c = sgn(orient(v[k], v[i], o));
                if (a != 0 && a == b && b == c) return false;
            }
        }
    }
    return true;
}

/// Every ordered pair joined by some simple path whose edge vectors fit in an open half-plane.
inline bool monotone(const GridDrawing& d) {
    const int n = d.n();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : d.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            std::vector<char> on(n, 0);
            std::vector<Point> dirs;
            std::function<bool(int)> dfs = [&](int v) {
                if (v == t) return true;
                on[v] = 1;
                for (int w : adj[v]) {
                    if (on[w]) continue;
                    dirs.push_back({d.coords[w].x - d.coords[v].x, d.coords[w].y - d.coords[v].y});
                    if (open_half_plane(dirs) && dfs(w)) return true;
                    dirs.pop_back();
                }
                on[v] = 0;
                return false;
            };
            if (!dfs(s)) return false;
        }
    return true;
}

inline std::int64_t spread(const GridDrawing& d, bool x) {
    std::int64_t lo = 0, hi = 0;
    for (int v = 0; v < d.n(); ++v) {
        const std::int64_t c = x ? d.coords[v].x : d.coords[v].y;
        if (v == 0 || c < lo) lo = c;
        if (v == 0 || c > hi) hi = c;
    }
    return d.n() ? hi - lo + 1 : 0;
}

}  // namespace oracle
