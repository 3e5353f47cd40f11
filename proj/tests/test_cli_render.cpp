#include <gtest/gtest.h>

#include <regex>

#include "commands.hpp"
#include "fixtures.hpp"
#include "segdraw/cli_render.hpp"
#include "segdraw/monotone_completion.hpp"
#include "segdraw/tree_segments.hpp"

using namespace segdraw;

namespace {

int polylines(const std::string& svg) {
    int c = 0;
    for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++c;
    return c;
}

DrawingFile k4_file() {
    const auto d = draw_three_connected(fixture::k4());
    return make_drawing_file(d.completion.drawing, d.completion.report, "k4", "three-connected");
}

bool mentions(const VerifyOutcome& v, const std::string& field) {
    return std::any_of(v.mismatches.begin(), v.mismatches.end(),
                       [&](const std::string& m) { return m.rfind(field + ":", 0) == 0; });
}

cli::Source generated(const std::string& family, int n, std::uint64_t seed) {
    cli::Options o;
    o.family = family;
    o.n = n;
    o.seed = seed;
    return cli::collect_sources(o, is_tree_family(parse_family(family)))[0];
}

}  // namespace

TEST(DrawingFile, RoundTrip) {
    const DrawingFile f = k4_file();
    const std::string text = serialize(f);
    const DrawingFile g = parse_drawing_file(text);
    EXPECT_EQ(g.graph_ref, "k4");
    EXPECT_EQ(g.algorithm, "three-connected");
    EXPECT_EQ(g.seed, "none");
    EXPECT_EQ(g.drawing.coords, f.drawing.coords);
    EXPECT_EQ(g.drawing.edges, f.drawing.edges);
    EXPECT_EQ(g.summary, f.summary);
    EXPECT_EQ(serialize(g), text);
    EXPECT_NE(text.find("\nv 0 "), std::string::npos);
    EXPECT_NE(text.find("# summary: segments="), std::string::npos);
}

TEST(DrawingFile, ParseErrors) {
    EXPECT_THROW(parse_drawing_file("n 2\nv 0 0 0\n"), GraphError);
    EXPECT_THROW(parse_drawing_file("n 2\nv 0 0 0\nv 1 0 0\n"), GraphError);
    EXPECT_THROW(parse_drawing_file("n 1\nv 0 0\n"), GraphError);
    EXPECT_THROW(parse_drawing_file("n 1\nv 0 0 0\nq 1\n"), GraphError);
}

TEST(Verify, UnmodifiedFilePasses) {
    const auto v = verify_drawing_file(parse_drawing_file(serialize(k4_file())));
    EXPECT_TRUE(v.ok());
    EXPECT_TRUE(v.mismatches.empty());
}

TEST(Verify, PerturbedCoordinateFailsPlanarity) {
    DrawingFile f = k4_file();
    auto& p = f.drawing.coords;
    // Reflect the inner vertex through the midpoint of an outer edge.
    p[3] = {p[0].x + p[1].x - p[3].x, p[0].y + p[1].y - p[3].y};
    const auto v = verify_drawing_file(parse_drawing_file(serialize(f)));
    EXPECT_FALSE(v.ok());
    EXPECT_FALSE(v.report.planar);
    EXPECT_TRUE(mentions(v, "planar"));
}

TEST(Verify, DoctoredSegmentCountFails) {
    DrawingFile f = k4_file();
    f.summary = std::regex_replace(f.summary, std::regex("segments=\\d+"), "segments=5");
    const auto v = verify_drawing_file(f);
    EXPECT_FALSE(v.ok());
    EXPECT_TRUE(mentions(v, "segments"));
    EXPECT_EQ(v.mismatches.size(), 1u);
}

TEST(RenderSvg, CollinearPathIsOnePolyline) {
    GridDrawing d;
    d.coords = {{0, 0}, {1, 0}, {2, 0}};
    d.edges = {{0, 1}, {1, 2}};
    const std::string svg = render_svg(d);
    EXPECT_EQ(polylines(svg), 1);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
}

TEST(RenderSvg, K4HasOnePolylinePerSegment) {
    const DrawingFile f = k4_file();
    const int s = make_report(f.drawing).segment_count;
    EXPECT_EQ(s, 6);
    EXPECT_EQ(polylines(render_svg(f.drawing)), s);
}

TEST(RenderSvg, Deterministic) {
    const DrawingFile f = k4_file();
    EXPECT_EQ(render_svg(f.drawing), render_svg(parse_drawing_file(serialize(f)).drawing));
}

TEST(RenderSvg, PolylineCountMatchesSegmentCount) {
    for (int n = 3; n <= 80; n += 7) {
        const auto d = draw_tree(gen_rooted_tree({Family::RandomTree, n, 3})).drawing;
        EXPECT_EQ(polylines(render_svg(d)), count_segments(d).count);
    }
    const auto d = draw_three_connected(gen_stacked_triangulation({Family::StackedTriangulation, 30, 1}));
    EXPECT_EQ(polylines(render_svg(d.completion.drawing)), d.completion.report.segment_count);
}

TEST(RenderSvg, YAxisFlipped) {
    GridDrawing d;
    d.coords = {{0, 0}, {0, 1}};
    d.edges = {{0, 1}};
    SvgStyle s;
    const std::string svg = render_svg(d, s);
    EXPECT_NE(svg.find("data-vertex=\"0\" cx=\"20.00\" cy=\"40.00\""), std::string::npos);
    EXPECT_NE(svg.find("data-vertex=\"1\" cx=\"20.00\" cy=\"20.00\""), std::string::npos);
}

TEST(Commands, DrawTreePathOfTen) {
    cli::Options o;
    const auto r = cli::draw_tree_cmd(generated("path", 10, 0), o, "", "");
    EXPECT_EQ(r.code, cli::Certified);
    EXPECT_NE(r.out.find("segments=1\n"), std::string::npos);
    EXPECT_NE(r.out.find("width=10\nheight=1\n"), std::string::npos);
}

TEST(Commands, DrawTreeStarOfFour) {
    cli::Options o;
    const auto r = cli::draw_tree_cmd(generated("star", 4, 0), o, "", "");
    EXPECT_EQ(r.code, cli::Certified);
    EXPECT_NE(r.out.find("segments=2\n"), std::string::npos);
}

TEST(Commands, DrawTreeRandom200) {
    cli::Options o;
    const auto r = cli::draw_tree_cmd(generated("random_tree", 200, 1), o, "", "");
    EXPECT_EQ(r.code, cli::Certified);
    std::smatch m;
    ASSERT_TRUE(std::regex_search(r.out, m, std::regex("segments=(\\d+)")));
    EXPECT_LE(std::stoi(m[1]), 149);
    EXPECT_NE(r.out.find("upper_bound=149\n"), std::string::npos);
}

TEST(Commands, DrawThreeConnectedExitCodes) {
    cli::Options o;
    const auto k4 = cli::draw_3con_cmd({"k4", serialize(fixture::k4())}, o, "", "");
    EXPECT_EQ(k4.code, cli::Certified);
    EXPECT_NE(k4.out.find("check_monotone=pass"), std::string::npos);
    const auto big = cli::draw_3con_cmd(generated("stacked_triangulation", 100, 0), o, "", "");
    EXPECT_EQ(big.code, cli::Unchecked);
    EXPECT_NE(big.out.find("triangulation_bound=262\n"), std::string::npos);
    EXPECT_NE(big.out.find("check_monotone=unchecked"), std::string::npos);
    const PlaneGraph cut = from_neighbor_rotation({{1, 2}, {2, 4, 0}, {0, 5, 1}, {4, 5}, {1, 5, 3}, {2, 3, 4}});
    EXPECT_EQ(cli::draw_3con_cmd({"cut", serialize(cut)}, o, "", "").code, cli::Failure);
}

TEST(Commands, VerifyAndFanOut) {
    std::vector<cli::Source> srcs;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto d = draw_tree(gen_rooted_tree({Family::RandomTree, 40, seed}));
        srcs.push_back({"t" + std::to_string(seed), serialize(make_drawing_file(d.drawing, d.report, "t", "tree"))});
    }
    auto broken = parse_drawing_file(srcs[2].text);
    broken.summary = std::regex_replace(broken.summary, std::regex("width=\\d+"), "width=1");
    srcs[2].text = serialize(broken);
    cli::Options o;
    const auto rs = cli::fan_out(srcs, 3, [&](std::size_t, const cli::Source& s) { return cli::verify_cmd(s, o); });
    ASSERT_EQ(rs.size(), 6u);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        EXPECT_EQ(rs[i].code, i == 2 ? cli::Failure : cli::Certified) << i;
        EXPECT_EQ(rs[i].out.rfind(srcs[i].ref + ":", 0), 0u);
    }
    EXPECT_NE(rs[2].out.find("mismatch width"), std::string::npos);
    EXPECT_EQ(cli::combine(rs), cli::Failure);
}

TEST(Commands, RealizerVerify) {
    const PlaneGraph g = fixture::prism();
    cli::Options o;
    const auto r = cli::realizer_cmd({"prism", serialize(g)}, o);
    EXPECT_EQ(r.code, cli::Certified);
    EXPECT_EQ(parse_realizer(g, r.out).dart_label, compute_realizer(g).dart_label);
}

TEST(Commands, BoundsRow) {
    cli::Options o;
    const auto r = cli::bounds_cmd({"k4", serialize(fixture::k4())}, o);
    EXPECT_EQ(r.code, cli::Certified);
    EXPECT_NE(r.out.find("k4"), std::string::npos);
    EXPECT_EQ(cli::bounds_header().substr(0, 5), "graph");
}

TEST(Commands, CombineOrder) {
    EXPECT_EQ(cli::combine({{cli::Certified, "", ""}, {cli::Unchecked, "", ""}}), cli::Unchecked);
    EXPECT_EQ(cli::combine({{cli::Unchecked, "", ""}, {cli::Failure, "", ""}}), cli::Failure);
    EXPECT_EQ(cli::combine({}), cli::Certified);
}
