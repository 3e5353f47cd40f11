#include "segdraw/cli_render.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace segdraw {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::pair<std::string, std::string>> summary_fields(const std::string& line) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw GraphError("summary: malformed token '" + tok + "'");
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << v;
    return out.str();
}

}  // namespace

DrawingFile make_drawing_file(const GridDrawing& d, const SegmentReport& r, std::string graph_ref,
                              std::string algorithm, std::string seed) {
    return {std::move(graph_ref), std::move(algorithm), std::move(seed), d, r.summary_line()};
}

std::string serialize(const DrawingFile& f) {
    std::ostringstream out;
    out << "# graph: " << f.graph_ref << '\n'
        << "# algorithm: " << f.algorithm << '\n'
        << "# seed: " << f.seed << '\n'
        << "n " << f.drawing.n() << '\n';
    for (int v = 0; v < f.drawing.n(); ++v)
        out << "v " << v << ' ' << f.drawing.coords[v].x << ' ' << f.drawing.coords[v].y << '\n';
    for (const auto& e : f.drawing.edges) out << "e " << e.u << ' ' << e.v << '\n';
    out << "# summary: " << f.summary << '\n';
    return out.str();
}

DrawingFile parse_drawing_file(std::string_view text) {
    DrawingFile f;
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1, lineno = 0;
    std::vector<char> seen;
    auto fail = [&](const std::string& why) { throw GraphError("line " + std::to_string(lineno) + ": " + why); };
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty()) continue;
        if (s[0] == '#') {
            const std::string body = trim(std::string_view(s).substr(1));
            const auto colon = body.find(':');
            if (colon == std::string::npos) continue;
            const std::string key = trim(std::string_view(body).substr(0, colon));
            const std::string value = trim(std::string_view(body).substr(colon + 1));
            if (key == "graph") f.graph_ref = value;
            else if (key == "algorithm") f.algorithm = value;
            else if (key == "seed") f.seed = value;
            else if (key == "summary") f.summary = value;
            continue;
        }
        std::istringstream ls(s);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            f.drawing.coords.assign(n, {});
            seen.assign(n, 0);
        } else if (tag == "v") {
            long long id, x, y;
            if (!(ls >> id >> x >> y)) fail("expected 'v <id> <x> <y>'");
            if (n < 0) {
                if (id < 0) fail("negative vertex id");
                if (id >= static_cast<long long>(f.drawing.coords.size())) {
                    f.drawing.coords.resize(id + 1);
                    seen.resize(id + 1, 0);
                }
            } else if (id < 0 || id >= n) {
                fail("vertex id out of range");
            }
            if (seen[id]) fail("vertex " + std::to_string(id) + " given twice");
            seen[id] = 1;
            f.drawing.coords[id] = {x, y};
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
            f.drawing.edges.push_back({u, v});
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw GraphError("missing vertex coordinates");
    f.drawing.validate();
    return f;
}

VerifyOutcome verify_drawing_file(const DrawingFile& f, int monotone_cap) {
    VerifyOutcome out;
    out.report = make_report(f.drawing, monotone_cap);
    const auto stored = summary_fields(f.summary);
    const auto fresh = summary_fields(out.report.summary_line());
    std::map<std::string, std::string> have(stored.begin(), stored.end());
    for (const auto& [key, value] : fresh) {
        const auto it = have.find(key);
        if (it == have.end()) out.mismatches.push_back(key + ": missing -> " + value);
        else if (it->second != value) out.mismatches.push_back(key + ": " + it->second + " -> " + value);
    }
    if (!out.report.planar && std::none_of(out.mismatches.begin(), out.mismatches.end(),
                                           [](const std::string& m) { return m.rfind("planar:", 0) == 0; }))
        out.mismatches.push_back("planar: no (" + out.report.planarity_witness + ")");
    return out;
}

std::string render_svg(const GridDrawing& d, const SvgStyle& style) {
    std::int64_t minx = 0, maxx = 0, miny = 0, maxy = 0;
    if (d.n() > 0) {
        minx = maxx = d.coords[0].x;
        miny = maxy = d.coords[0].y;
        for (const auto& p : d.coords) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    }
    auto px = [&](const Point& p) { return style.margin + style.scale * static_cast<double>(p.x - minx); };
    auto py = [&](const Point& p) { return style.margin + style.scale * static_cast<double>(maxy - p.y); };
    const double w = 2 * style.margin + style.scale * static_cast<double>(maxx - minx);
    const double h = 2 * style.margin + style.scale * static_cast<double>(maxy - miny);

    const auto seg = count_segments(d);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
    out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(style.stroke_width)
        << "\" stroke-linecap=\"round\">\n";
    for (std::size_t s = 0; s < seg.paths.size(); ++s) {
        out << "<polyline data-segment=\"" << s << "\" points=\"";
        const auto& path = seg.paths[s];
        for (std::size_t i = 0; i < path.size(); ++i)
            out << (i ? " " : "") << fmt(px(d.coords[path[i]])) << ',' << fmt(py(d.coords[path[i]]));
        out << "\"/>\n";
    }
    out << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
    for (int v = 0; v < d.n(); ++v)
        out << "<circle data-vertex=\"" << v << "\" cx=\"" << fmt(px(d.coords[v])) << "\" cy=\""
            << fmt(py(d.coords[v])) << "\" r=\"" << fmt(style.vertex_radius) << "\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace segdraw
