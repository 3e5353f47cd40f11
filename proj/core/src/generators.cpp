#include "segdraw/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace segdraw {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t k) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * k) >> 64);
}

namespace {

const std::array<std::pair<Family, const char*>, 8> kNames{{
    {Family::RandomTree, "random_tree"},
    {Family::Path, "path"},
    {Family::Star, "star"},
    {Family::Caterpillar, "caterpillar"},
    {Family::Spider, "spider"},
    {Family::StackedTriangulation, "stacked_triangulation"},
    {Family::Prism, "prism"},
    {Family::Wheel, "wheel"},
}};

RootedOrderedTree from_parents(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    RootedOrderedTree t;
    t.root = 0;
    t.parent = parent;
    t.children.assign(n, {});
    for (int v = 1; v < n; ++v) t.children[parent[v]].push_back(v);
    return t;
}

}  // namespace

PlaneGraph from_neighbor_rotation(const std::vector<std::vector<int>>& nbr, std::vector<int> outer) {
    const int n = static_cast<int>(nbr.size());
    std::vector<Edge> edges;
    std::map<std::pair<int, int>, int> id;
    for (int v = 0; v < n; ++v)
        for (int u : nbr[v])
            if (v < u) {
                id[{v, u}] = static_cast<int>(edges.size());
                edges.push_back({v, u});
            }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        for (int u : nbr[v]) rot[v].push_back(id.at({std::min(u, v), std::max(u, v)}));
    return PlaneGraph(n, std::move(edges), std::move(rot), std::move(outer));
}

Family parse_family(const std::string& name) {
    for (auto& [f, s] : kNames)
        if (name == s) return f;
    throw GraphError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
    for (auto& [g, s] : kNames)
        if (g == f) return s;
    return "unknown";
}

bool is_tree_family(Family f) {
    return f == Family::RandomTree || f == Family::Path || f == Family::Star || f == Family::Caterpillar ||
           f == Family::Spider;
}

RootedOrderedTree gen_rooted_tree(const GenSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw GraphError("tree needs n >= 1");
    SplitMix64 rng(spec.seed);
    std::vector<int> parent(n, -1);
    switch (spec.family) {
        case Family::RandomTree:
            for (int v = 1; v < n; ++v) parent[v] = static_cast<int>(rng.below(v));
            break;
        case Family::Path:
            for (int v = 1; v < n; ++v) parent[v] = v - 1;
            break;
        case Family::Star:
            for (int v = 1; v < n; ++v) parent[v] = 0;
            break;
        case Family::Caterpillar: {
            const int spine = std::max(1, (n + 1) / 2);
            for (int v = 1; v < spine; ++v) parent[v] = v - 1;
            for (int v = spine; v < n; ++v) parent[v] = static_cast<int>(rng.below(spine));
            break;
        }
        case Family::Spider: {
            const int rest = n - 1;
            int legs = n <= 10 ? 3 : static_cast<int>(std::sqrt(static_cast<double>(rest)));
            legs = std::max(1, std::min(legs, rest));
            int v = 1;
            for (int leg = 0; leg < legs && v < n; ++leg) {
                int len = rest / legs + (leg < rest % legs ? 1 : 0);
                for (int j = 0; j < len; ++j, ++v) parent[v] = j == 0 ? 0 : v - 1;
            }
            break;
        }
        default:
            throw GraphError("family '" + family_name(spec.family) + "' is not a tree family");
    }
    return from_parents(parent);
}

TreeFile gen_tree(const GenSpec& spec) {
    RootedOrderedTree t = gen_rooted_tree(spec);
    return {to_plane_graph(t), t.root};
}

PlaneGraph gen_stacked_triangulation(const GenSpec& spec) {
    const int n = spec.n;
    if (n < 4) throw GraphError("stacked triangulation needs n >= 4");
    SplitMix64 rng(spec.seed);
    std::vector<std::vector<int>> nbr{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
    std::vector<std::array<int, 3>> inner{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
    nbr.resize(n);
    auto insert_after = [&](int at, int after, int x) {
        auto& r = nbr[at];
        r.insert(std::find(r.begin(), r.end(), after) + 1, x);
    };
    for (int x = 4; x < n; ++x) {
        const std::size_t i = rng.below(inner.size());
        auto [a, b, c] = inner[i];
        nbr[x] = {a, b, c};
        insert_after(a, b, x);
        insert_after(b, c, x);
        insert_after(c, a, x);
        inner[i] = {a, b, x};
        inner.push_back({b, c, x});
        inner.push_back({c, a, x});
    }
    return from_neighbor_rotation(nbr, {0, 1, 2});
}

PlaneGraph gen_prism(int n) {
    if (n < 6 || n % 2) throw GraphError("prism needs an even n >= 6");
    const int k = n / 2;
    std::vector<std::vector<int>> nbr(n);
    std::vector<int> outer;
    for (int i = 0; i < k; ++i) {
        const int nx = (i + 1) % k, pv = (i + k - 1) % k;
        nbr[i] = {nx, k + i, pv};
        nbr[k + i] = {i, k + nx, k + pv};
        outer.push_back(i);
    }
    return from_neighbor_rotation(nbr, outer);
}

PlaneGraph gen_wheel(int n) {
    if (n < 4) throw GraphError("wheel needs n >= 4");
    const int k = n - 1;
    std::vector<std::vector<int>> nbr(n);
    std::vector<int> outer;
    for (int i = 0; i < k; ++i) {
        const int v = 1 + i, nx = 1 + (i + 1) % k, pv = 1 + (i + k - 1) % k;
        nbr[v] = {nx, 0, pv};
        nbr[0].push_back(v);
        outer.push_back(v);
    }
    return from_neighbor_rotation(nbr, outer);
}

std::string generate_text(const GenSpec& spec) {
    switch (spec.family) {
        case Family::StackedTriangulation: return serialize(gen_stacked_triangulation(spec));
        case Family::Prism: return serialize(gen_prism(spec.n));
        case Family::Wheel: return serialize(gen_wheel(spec.n));
        default: return serialize(gen_tree(spec));
    }
}

}  // namespace segdraw
