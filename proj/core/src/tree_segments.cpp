#include "segdraw/tree_segments.hpp"

#include <algorithm>

namespace segdraw {

namespace {

std::vector<int> degrees(const RootedOrderedTree& t) {
    std::vector<int> deg(t.n());
    for (int v = 0; v < t.n(); ++v) deg[v] = static_cast<int>(t.children[v].size()) + (t.parent[v] >= 0 ? 1 : 0);
    return deg;
}

// Compact subtree of t on the vertices with keep[v]; parent = nearest kept ancestor.
RootedOrderedTree compact(const RootedOrderedTree& t, const std::vector<char>& keep, std::vector<int>& ids) {
    std::vector<int> local(t.n(), -1);
    ids.clear();
    RootedOrderedTree out;
    for (int v : t.preorder()) {
        if (!keep[v]) continue;
        local[v] = static_cast<int>(ids.size());
        ids.push_back(v);
        out.parent.push_back(-1);
        out.children.emplace_back();
        int p = t.parent[v];
        while (p >= 0 && !keep[p]) p = t.parent[p];
        if (p >= 0) {
            out.parent.back() = local[p];
            out.children[local[p]].push_back(local[v]);
        } else {
            out.root = local[v];
        }
    }
    return out;
}

struct Branch {
    int end = -1;             // first vertex of degree != 2
    std::vector<int> chain;   // degree-2 vertices from the parent side
};

Branch follow(const RootedOrderedTree& t, const std::vector<int>& deg, int c) {
    Branch b;
    while (deg[c] == 2) {
        b.chain.push_back(c);
        c = t.children[c][0];
    }
    b.end = c;
    return b;
}

// Indices of `gammas` ordered by non-increasing value, stable.
std::vector<int> counting_sort_desc(const std::vector<int>& gammas) {
    int hi = 0;
    for (int g : gammas) hi = std::max(hi, g);
    std::vector<int> start(hi + 2, 0);
    for (int g : gammas) ++start[hi - g + 1];
    for (int k = 1; k <= hi + 1; ++k) start[k] += start[k - 1];
    std::vector<int> order(gammas.size());
    for (int i = 0; i < static_cast<int>(gammas.size()); ++i) order[start[hi - gammas[i]]++] = i;
    return order;
}

}  // namespace

int choose_root(const RootedOrderedTree& t) {
    const auto deg = degrees(t);
    for (int v = 0; v < t.n(); ++v)
        if (deg[v] >= 3) return v;
    return -1;
}

ReducedTrees reduce(const RootedOrderedTree& input) {
    const int r = choose_root(input);
    if (r < 0) throw GraphError("tree is a path; use the path drawing");
    ReducedTrees red;
    red.t = input.rerooted(r);
    const auto& t = red.t;
    const int n = t.n();
    const auto deg = degrees(t);
    red.belongs.assign(n, -1);
    red.gamma.assign(n, 0);
    const auto post = t.postorder();
    for (int v : post) {
        if (deg[v] != 2) continue;
        const int c = t.children[v][0];
        red.belongs[v] = deg[c] == 2 ? red.belongs[c] : c;
        ++red.gamma[red.belongs[v]];
    }
    for (int v = 0; v < n; ++v) {
        red.alpha += deg[v] == 1;
        red.beta += deg[v] == 2;
    }
    std::vector<char> keep(n);
    for (int v = 0; v < n; ++v) keep[v] = deg[v] != 2;
    red.t_red = compact(t, keep, red.red_vertex);
    for (int v = 0; v < n; ++v) keep[v] = deg[v] >= 3;
    red.t_rred = compact(t, keep, red.rred_vertex);
    return red;
}

std::vector<Point> place_leaf_fan(const std::vector<int>& gammas, const LeafFanContext& ctx) {
    const int a = static_cast<int>(gammas.size());
    std::vector<Point> pos(a);
    for (int k = 1; k <= a; ++k) {
        const std::int64_t g = gammas[k - 1] + 1;
        const std::int64_t i = (k + 1) / 2;
        pos[k - 1] = k % 2 ? Point{-g * i, -g} : Point{g * i, g};
    }
    if (a % 2) {
        const std::int64_t g = gammas[a - 1] + 1;
        if (ctx.leaf_in_rred)
            pos[a - 1] = {0, -g};
        else if (!ctx.own_chain && !ctx.first_child)
            pos[a - 1] = {0, g};
    }
    return pos;
}

std::int64_t step4_shift(const std::vector<LeftSegment>& own, const std::vector<SpineFan>& spine) {
    std::int64_t d = 0;
    for (const auto& fan : spine)
        for (const auto& s : fan.segments)
            for (const auto& o : own) {
                if (s.i <= o.i) continue;
                const std::int64_t reach = std::min(o.reach, s.reach);
                const std::int64_t num = reach * (s.i - o.i) - fan.depth * o.i * s.i;
                if (num >= 0) d = std::max(d, num / (o.i * s.i) + 1);
            }
    return d;
}

TreeDrawing draw_tree(const RootedOrderedTree& input, bool with_report) {
    input.validate();
    const int n = input.n();
    if (n < 3) throw GraphError("tree drawing needs n >= 3");
    TreeDrawing out;
    out.drawing.edges = input.edges();
    out.drawing.coords.assign(n, {});
    out.root = choose_root(input);

    if (out.root < 0) {
        out.path = true;
        const auto deg = degrees(input);
        int end = 0;
        while (deg[end] != 1) ++end;
        out.rooted = input.rerooted(end);
        int v = end;
        for (std::int64_t x = 0; v >= 0; ++x) {
            out.drawing.coords[v] = {x, 0};
            v = out.rooted.children[v].empty() ? -1 : out.rooted.children[v][0];
        }
        if (with_report) out.report = make_report(out.drawing);
        return out;
    }

    out.rooted = input.rerooted(out.root);
    const auto& t = out.rooted;
    const auto deg = degrees(t);
    std::vector<Point> rel(n);  // offset to the parent in T
    out.boxes.assign(n, {});
    out.subtree_size.assign(n, 1);
    std::vector<std::vector<LeftSegment>> left(n);
    std::vector<int> first_core(n, -1);
    std::vector<std::int64_t> first_dy(n, 0);
    std::vector<int> own_chain(n, 0);
    std::vector<char> is_first(n, 0);

    std::vector<std::vector<Branch>> core_of(n), leaves_of(n);
    for (int v = 0; v < n; ++v) {
        if (deg[v] < 3) continue;
        for (int c : t.children[v]) {
            Branch b = follow(t, deg, c);
            if (deg[b.end] == 1) {
                leaves_of[v].push_back(std::move(b));
            } else {
                own_chain[b.end] = static_cast<int>(b.chain.size());
                is_first[b.end] = core_of[v].empty();
                core_of[v].push_back(std::move(b));
            }
        }
    }

    const auto post = t.postorder();
    for (int v : post) {
        if (deg[v] < 3) continue;
        const auto& core = core_of[v];
        const auto& leaves = leaves_of[v];
        SubtreeBox box;
        int size = 1;
        auto put = [&](int u, Point p, Point at_parent) {
            rel[u] = {p.x - at_parent.x, p.y - at_parent.y};
            box.left = std::max(box.left, -p.x);
            box.right = std::max(box.right, p.x);
            box.top = std::max(box.top, p.y);
            box.bottom = std::max(box.bottom, -p.y);
        };

        // Steps 1 and 2.
        const int k = static_cast<int>(core.size());
        std::vector<Point> at(k);
        std::int64_t top_sum = 0;
        for (const auto& b : core) top_sum += out.boxes[b.end].top;
        for (int i = 0; i < k; ++i) {
            const auto& bi = out.boxes[core[i].end];
            if (i == 0) {
                at[i] = {0, -1 - top_sum};
            } else {
                const auto& bp = out.boxes[core[i - 1].end];
                at[i] = {at[i - 1].x + bp.right + bi.left + 1, at[i - 1].y + bp.top};
            }
        }
        for (int i = 0; i < k; ++i) {
            at[i].y -= static_cast<std::int64_t>(core[i].chain.size());
        }

        // Step 3.
        std::vector<int> gammas;
        for (const auto& b : leaves) gammas.push_back(static_cast<int>(b.chain.size()));
        const auto order = counting_sort_desc(gammas);
        std::vector<int> sorted;
        for (int i : order) sorted.push_back(gammas[i]);
        LeafFanContext ctx{k == 0, own_chain[v] > 0, static_cast<bool>(is_first[v])};
        const auto fan = place_leaf_fan(sorted, ctx);
        std::int64_t max_reach = 0;
        for (std::size_t j = 0; j < order.size(); ++j) {
            const auto& b = leaves[order[j]];
            const std::int64_t g = static_cast<std::int64_t>(b.chain.size()) + 1;
            const Point step{fan[j].x / g, fan[j].y / g};
            Point prev{0, 0};
            for (std::int64_t s = 1; s <= g; ++s) {
                const int u = s < g ? b.chain[s - 1] : b.end;
                const Point p{step.x * s, step.y * s};
                put(u, p, prev);
                prev = p;
            }
            size += static_cast<int>(g);
            if (fan[j].x < 0) {
                left[v].push_back({-step.x, -fan[j].x});
                max_reach = std::max(max_reach, -fan[j].x);
            }
        }

        // Step 4.
        if (k > 0 && !left[v].empty()) {
            std::vector<SpineFan> spine;
            int w = core[0].end;
            std::int64_t depth = -at[0].y;
            while (w >= 0 && depth < max_reach) {
                spine.push_back({depth, left[w]});
                if (first_core[w] < 0) break;
                depth -= first_dy[w];
                w = first_core[w];
            }
            at[0].y -= step4_shift(left[v], spine);
        }

        for (int i = 0; i < k; ++i) {
            const auto& b = core[i];
            const std::int64_t beta = static_cast<std::int64_t>(b.chain.size());
            Point prev{0, 0};
            for (std::int64_t j = 0; j < beta; ++j) {
                const Point p{at[i].x, i == 0 ? -1 - top_sum - j : at[i].y + beta - j};
                put(b.chain[j], p, prev);
                prev = p;
            }
            put(b.end, at[i], prev);
            const auto& bi = out.boxes[b.end];
            box.left = std::max(box.left, bi.left - at[i].x);
            box.right = std::max(box.right, bi.right + at[i].x);
            box.top = std::max(box.top, bi.top + at[i].y);
            box.bottom = std::max(box.bottom, bi.bottom - at[i].y);
            size += out.subtree_size[b.end] + static_cast<int>(beta);
        }
        if (k > 0) {
            first_core[v] = core[0].end;
            first_dy[v] = at[0].y;
        }
        out.boxes[v] = box;
        out.subtree_size[v] = size;
    }

    auto& xy = out.drawing.coords;
    for (int u : t.preorder())
        if (u != out.root) xy[u] = {xy[t.parent[u]].x + rel[u].x, xy[t.parent[u]].y + rel[u].y};
    Point lo = xy[0];
    for (const auto& p : xy) lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    for (auto& p : xy) p = {p.x - lo.x, p.y - lo.y};
    if (with_report) out.report = make_report(out.drawing);
    return out;
}

std::vector<SubtreeAccount> subtree_accounting(const TreeDrawing& d, const SegmentPartition& parts) {
    std::vector<SubtreeAccount> acc;
    if (d.path) return acc;
    const auto& t = d.rooted;
    const int n = t.n();
    const auto deg = degrees(t);
    std::vector<int> up(n, -1);
    for (int e = 0; e < static_cast<int>(d.drawing.edges.size()); ++e) {
        const auto& [a, b] = d.drawing.edges[e];
        up[t.parent[b] == a ? b : a] = e;
    }
    std::vector<int> stamp(parts.count, -1);
    for (int v = 0; v < n; ++v) {
        if (deg[v] < 3 || v == d.root) continue;
        SubtreeAccount s;
        s.v = v;
        s.n_plus = d.subtree_size[v];
        auto touch = [&](int e) {
            const int id = parts.segment_of_edge[e];
            if (stamp[id] != v) {
                stamp[id] = v;
                ++s.segments;
            }
        };
        int x = v;
        while (true) {
            const int p = t.parent[x];
            touch(up[x]);
            if (deg[p] >= 3) {
                s.vertical = d.drawing.coords[p].x == d.drawing.coords[x].x;
                break;
            }
            ++s.n_plus;
            x = p;
        }
        std::vector<int> stack{v};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int c : t.children[u]) {
                touch(up[c]);
                stack.push_back(c);
            }
        }
        acc.push_back(s);
    }
    return acc;
}

}  // namespace segdraw
