#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "segdraw/cli_render.hpp"
#include "segdraw/monotone_completion.hpp"
#include "segdraw/schnyder_realizer.hpp"
#include "segdraw/tree_segments.hpp"

namespace segdraw::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write " + path);
    out << text;
}

bool has_root_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t");
        if (b != std::string::npos && line.compare(b, 5, "root ") == 0) return true;
    }
    return false;
}

TreeFile load_tree(const std::string& text) {
    if (has_root_line(text)) return parse_tree(text);
    TreeFile t{parse_graph(text), 0};
    if (t.graph.m() != t.graph.n() - 1) throw GraphError("graph is not a tree: m != n - 1");
    return t;
}

struct Checks {
    std::ostringstream lines;
    int code = Certified;
    void add(const std::string& name, Verdict v) {
        lines << "check_" << name << '=' << (v == Verdict::Yes ? "pass" : v == Verdict::No ? "fail" : "unchecked")
              << '\n';
        if (v == Verdict::No) code = Failure;
        else if (v == Verdict::Unchecked && code == Certified) code = Unchecked;
    }
    void add(const std::string& name, bool ok) { add(name, ok ? Verdict::Yes : Verdict::No); }
};

std::string seed_of(const Options& o, const Source& src) {
    return src.ref.rfind("gen:", 0) == 0 ? std::to_string(o.seed) : "none";
}

void emit(const DrawingFile& f, const std::string& out_path, const std::string& svg_path) {
    if (!out_path.empty()) write_file(out_path, serialize(f));
    if (!svg_path.empty()) write_file(svg_path, render_svg(f.drawing));
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

std::vector<Source> collect_sources(const Options& o, bool want_tree) {
    std::vector<Source> out;
    for (const auto& p : o.inputs) out.push_back({p, read_file(p)});
    if (out.empty() && o.family) {
        GenSpec spec{parse_family(*o.family), o.n, o.seed};
        if (want_tree != is_tree_family(spec.family))
            throw GraphError("family " + *o.family + (want_tree ? " is not a tree family" : " is a tree family"));
        out.push_back({"gen:" + family_name(spec.family) + ":" + std::to_string(o.n) + ":" + std::to_string(o.seed),
                       generate_text(spec)});
    }
    if (out.empty()) throw GraphError("no input: give files or --family/--n/--seed");
    return out;
}

Result draw_tree_cmd(const Source& src, const Options& o, const std::string& out_path, const std::string& svg_path) {
    const TreeFile tf = load_tree(src.text);
    const auto t = RootedOrderedTree::from_plane_tree(tf.graph, tf.root);
    const int n = t.n();
    const TreeDrawing d = draw_tree(t);
    const SegmentReport& r = d.report;
    const int bound = d.path ? 1 : 3 * n / 4 - 1;

    Checks c;
    c.add("planar", r.planar);
    c.add("segments_upper", r.segment_count <= bound);
    c.add("segments_lower", r.segment_count >= r.bounds.max());
    c.add("grid", r.width <= n && r.height <= n);

    Result res;
    std::ostringstream out;
    out << "graph=" << src.ref << '\n' << "algorithm=tree-segments\n" << r.to_key_values();
    out << "upper_bound=" << bound << '\n' << c.lines.str();
    res.out = out.str();
    res.code = c.code;
    emit(make_drawing_file(d.drawing, r, src.ref, "tree-segments", seed_of(o, src)), out_path, svg_path);
    return res;
}

Result draw_3con_cmd(const Source& src, const Options& o, const std::string& out_path, const std::string& svg_path) {
    const PlaneGraph g = parse_graph(src.text);
    const Connectivity conn = check_connectivity(g, 3);
    if (conn == Connectivity::No) return {Failure, "", src.ref + ": error: graph is not 3-connected\n"};
    const auto res3 = draw_three_connected(g, o.monotone_cap);
    const SegmentReport& r = res3.completion.report;
    const std::int64_t n = g.n(), m = g.m();
    const int lambda = res3.completion.lambda;
    const std::int64_t bound_lambda = m - n + 1 + lambda;
    const std::int64_t bound_main = m - ceil_div(n - 4, 3);
    const bool triangulation = m == 3 * n - 6;

    Checks c;
    c.add("connectivity", conn == Connectivity::Yes ? Verdict::Yes : Verdict::Unchecked);
    c.add("planar", r.planar);
    c.add("segments_lambda", r.segment_count <= bound_lambda);
    c.add("segments_upper", r.segment_count <= bound_main);
    if (triangulation) c.add("segments_triangulation", 3 * r.segment_count <= 8 * n - 14);
    c.add("segments_lower", r.segment_count >= r.bounds.max());
    c.add("slopes_preserved", res3.completion.slopes_preserved);
    c.add("orderly", res3.orderly.empty());
    c.add("monotone", r.monotone);

    std::ostringstream out;
    out << "graph=" << src.ref << '\n' << "algorithm=three-connected\n" << r.to_key_values();
    out << "tree=" << res3.tree << '\n'
        << "leaves=" << res3.census[0] << ',' << res3.census[1] << ',' << res3.census[2] << '\n'
        << "lambda=" << lambda << '\n'
        << "bound_lambda=" << bound_lambda << '\n'
        << "upper_bound=" << bound_main << '\n';
    if (triangulation) out << "triangulation_bound=" << (8 * n - 14) / 3 << '\n';
    out << "stretch=" << (res3.completion.plan.method == StretchMethod::Region ? "region" : "iterative") << '\n'
        << c.lines.str();
    emit(make_drawing_file(res3.completion.drawing, r, src.ref, "three-connected", seed_of(o, src)), out_path,
         svg_path);
    return {c.code, out.str(), ""};
}

Result realizer_cmd(const Source& src, const Options& o) {
    const PlaneGraph g = parse_graph(src.text);
    if (o.verify_realizer.empty()) return {Certified, serialize(g, compute_realizer(g)), ""};

    const SchnyderRealizer r = parse_realizer(g, read_file(o.verify_realizer));
    std::ostringstream out;
    const auto violations = validate_realizer(g, r);
    for (const auto& v : violations) out << "violation vertex=" << v.vertex << " kind=" << v.kind << ' ' << v.detail << '\n';
    int code = violations.empty() ? Certified : Failure;
    if (violations.empty()) {
        const auto census = leaf_census(r);
        const int total = census[0] + census[1] + census[2];
        const auto fa = check_face_assignment(g, assign_leaves_to_faces(g, r));
        out << "leaves=" << census[0] << ',' << census[1] << ',' << census[2] << '\n'
            << "leaf_total=" << total << '\n'
            << "leaf_bound=" << 2 * g.n() + 1 << '\n'
            << "face_assignment=" << (fa.ok() ? "ok" : "violated") << '\n';
        if (total > 2 * g.n() + 1 || !fa.ok()) code = Failure;
    }
    out << "realizer=" << (code == Certified ? "valid" : "invalid") << '\n';
    return {code, out.str(), ""};
}

Result verify_cmd(const Source& src, const Options& o) {
    const auto f = parse_drawing_file(src.text);
    const auto v = verify_drawing_file(f, o.monotone_cap);
    std::ostringstream out;
    out << src.ref << ": " << (v.ok() ? "pass" : "fail") << '\n';
    for (const auto& m : v.mismatches) out << "  mismatch " << m << '\n';
    return {v.ok() ? Certified : Failure, out.str(), ""};
}

Result gen_cmd(const Options& o) {
    if (!o.family) throw GraphError("gen needs --family");
    const std::string text = generate_text({parse_family(*o.family), o.n, o.seed});
    if (!o.out.empty()) {
        write_file(o.out, text);
        return {};
    }
    return {Certified, text, ""};
}

Result render_cmd(const Source& src, const Options& o) {
    const auto f = parse_drawing_file(src.text);
    const std::string svg = render_svg(f.drawing);
    if (o.svg.empty()) return {Certified, svg, ""};
    write_file(o.svg, svg);
    return {};
}

std::string bounds_header() {
    std::ostringstream out;
    out << std::left << std::setw(32) << "graph" << std::right << std::setw(8) << "n" << std::setw(8) << "m"
        << std::setw(8) << "odd/2" << std::setw(8) << "deg/2" << std::setw(8) << "m/(n-1)" << std::setw(8) << "lower"
        << std::setw(8) << "drawn" << std::setw(8) << "upper" << '\n';
    return out.str();
}

Result bounds_cmd(const Source& src, const Options& o) {
    std::int64_t n, m, drawn, upper;
    LowerBounds lb;
    if (src.text.find("# summary:") != std::string::npos) {
        const auto f = parse_drawing_file(src.text);
        const auto r = make_report(f.drawing, o.monotone_cap);
        n = f.drawing.n();
        m = static_cast<std::int64_t>(f.drawing.edges.size());
        lb = r.bounds;
        drawn = r.segment_count;
        upper = m == n - 1 ? 3 * n / 4 - 1 : m - ceil_div(n - 4, 3);
    } else if (has_root_line(src.text) || parse_graph(src.text).m() == parse_graph(src.text).n() - 1) {
        const TreeFile tf = load_tree(src.text);
        const auto d = draw_tree(RootedOrderedTree::from_plane_tree(tf.graph, tf.root));
        n = tf.graph.n();
        m = tf.graph.m();
        lb = d.report.bounds;
        drawn = d.report.segment_count;
        upper = d.path ? 1 : 3 * n / 4 - 1;
    } else {
        const PlaneGraph g = parse_graph(src.text);
        const auto d = draw_three_connected(g, o.monotone_cap);
        n = g.n();
        m = g.m();
        lb = d.completion.report.bounds;
        drawn = d.completion.report.segment_count;
        upper = m - ceil_div(n - 4, 3);
    }
    std::ostringstream out;
    out << std::left << std::setw(32) << src.ref << std::right << std::setw(8) << n << std::setw(8) << m << std::setw(8)
        << lb.odd_half << std::setw(8) << lb.max_half_degree << std::setw(8) << lb.density << std::setw(8) << lb.max()
        << std::setw(8) << drawn << std::setw(8) << upper << '\n';
    const bool ok = lb.max() <= drawn && drawn <= upper;
    return {ok ? Certified : Failure, out.str(), ""};
}

int combine(const std::vector<Result>& rs) {
    int code = Certified;
    for (const auto& r : rs) {
        if (r.code == Failure) return Failure;
        if (r.code == Unchecked) code = Unchecked;
    }
    return code;
}

std::string output_path(const std::string& base, const std::string& ref, std::size_t count, const char* ext) {
    if (base.empty() || count <= 1) return base;
    fs::create_directories(base);
    std::string stem = fs::path(ref).filename().string();
    for (char& ch : stem)
        if (ch == ':') ch = '_';
    return (fs::path(base) / (stem + ext)).string();
}

}  // namespace segdraw::cli
