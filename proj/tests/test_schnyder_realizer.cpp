#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "segdraw/generators.hpp"
#include "segdraw/orderly_tree_drawer.hpp"
#include "segdraw/schnyder_realizer.hpp"

using namespace segdraw;

namespace {

bool has_kind(const std::vector<RealizerViolation>& v, const std::string& kind) {
    return std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.kind == kind; });
}

int bidirected(const PlaneGraph& g, const SchnyderRealizer& r) {
    int c = 0;
    for (int e = 0; e < g.m(); ++e) c += r.dart_label[2 * e] && r.dart_label[2 * e + 1];
    return c;
}

std::vector<PlaneGraph> fixtures() {
    std::vector<PlaneGraph> gs{fixture::k4(), fixture::prism(), fixture::cube(), gen_prism(12), fixture::wheel(4),
                               fixture::wheel(5), fixture::wheel(9)};
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        gs.push_back(gen_stacked_triangulation({Family::StackedTriangulation, 5 + static_cast<int>(seed) * 3, seed}));
    return gs;
}

}  // namespace

TEST(ComputeRealizer, K4InteriorVertexPointsAtEachRoot) {
    const PlaneGraph g = fixture::k4();
    const auto r = compute_realizer(g);
    EXPECT_EQ(r.roots, (std::array<int, 3>{0, 1, 2}));
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(r.parent(3, k), r.root(k));
    EXPECT_TRUE(validate_realizer(g, r).empty());
}

TEST(ComputeRealizer, K4RealizerIsUniqueForFixedRoots) {
    // Exhaustive search over the labels of the three interior edges.
    const PlaneGraph g = fixture::k4();
    const auto ref = compute_realizer(g);
    std::vector<int> darts;
    for (int e = 0; e < g.m(); ++e)
        if (g.edge(e).u == 3 || g.edge(e).v == 3) darts.insert(darts.end(), {2 * e, 2 * e + 1});
    ASSERT_EQ(darts.size(), 6u);
    int valid = 0;
    for (int code = 0; code < 4096; ++code) {
        SchnyderRealizer r;
        r.roots = ref.roots;
        r.dart_label = ref.dart_label;
        for (int i = 0, c = code; i < 6; ++i, c /= 4) r.dart_label[darts[i]] = c % 4;
        build_trees(g, r);
        if (validate_realizer(g, r).empty()) {
            ++valid;
            EXPECT_EQ(r.dart_label, ref.dart_label);
        }
    }
    EXPECT_EQ(valid, 1);
}

TEST(ComputeRealizer, StackedFiveIsValid) {
    const PlaneGraph g = gen_stacked_triangulation({Family::StackedTriangulation, 5, 1});
    EXPECT_TRUE(validate_realizer(g, compute_realizer(g)).empty());
}

TEST(ComputeRealizer, PrismHasABidirectedEdge) {
    const PlaneGraph g = fixture::prism();
    const auto r = compute_realizer(g);
    EXPECT_TRUE(validate_realizer(g, r).empty());
    EXPECT_GE(bidirected(g, r), 1);
}

TEST(ComputeRealizer, EveryComputedRealizerValidates) {
    for (const auto& g : fixtures()) {
        const auto r = compute_realizer(g);
        EXPECT_TRUE(validate_realizer(g, r).empty()) << g.n();
        for (int k = 1; k <= 3; ++k) EXPECT_NO_THROW(r.tree(k).validate());
    }
}

TEST(ComputeRealizer, RejectsGraphsThatAreNotThreeConnected) {
    const PlaneGraph g = from_neighbor_rotation({{1, 2}, {2, 4, 0}, {0, 5, 1}, {4, 5}, {1, 5, 3}, {2, 3, 4}});
    EXPECT_THROW(compute_realizer(g), GraphError);
    EXPECT_THROW(compute_realizer(fixture::triangle()), GraphError);
}

TEST(ValidateRealizer, SwappedLabelsAtInteriorVertex) {
    const PlaneGraph g = fixture::k4();
    auto r = compute_realizer(g);
    const int d1 = g.dart_from(3, g.find_edge(3, r.parent(3, 1)));
    const int d2 = g.dart_from(3, g.find_edge(3, r.parent(3, 2)));
    std::swap(r.dart_label[d1], r.dart_label[d2]);
    build_trees(g, r);
    const auto v = validate_realizer(g, r);
    ASSERT_FALSE(v.empty());
    EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const auto& x) { return x.vertex == 3; }));
}

TEST(ValidateRealizer, CycleInATreeIsRejected) {
    // Re-point the 1-edge of a parent back at its child.
    const PlaneGraph g = gen_stacked_triangulation({Family::StackedTriangulation, 12, 3});
    const auto ref = compute_realizer(g);
    int tested = 0;
    for (int u = 0; u < g.n(); ++u) {
        const int p = ref.parent(u, 1);
        if (p < 0 || p == ref.root(1)) continue;
        auto r = ref;
        r.dart_label[g.dart_from(p, g.find_edge(p, ref.parent(p, 1)))] = 0;
        r.dart_label[g.dart_from(p, g.find_edge(p, u))] = 1;
        build_trees(g, r);
        EXPECT_FALSE(validate_realizer(g, r).empty()) << u;
        ++tested;
    }
    EXPECT_GT(tested, 0);
}

TEST(ValidateRealizer, UnlabelledEdgeAndWrongRoots) {
    const PlaneGraph g = fixture::prism();
    auto r = compute_realizer(g);
    auto bad = r;
    bad.dart_label[0] = bad.dart_label[1] = 0;
    EXPECT_TRUE(has_kind(validate_realizer(g, bad), "unlabelled-edge"));
    bad = r;
    bad.roots[0] = 7;
    EXPECT_TRUE(has_kind(validate_realizer(g, bad), "root"));
}

TEST(RealizerFile, RoundTrip) {
    for (const auto& g : fixtures()) {
        const auto r = compute_realizer(g);
        const auto s = parse_realizer(g, serialize(g, r));
        EXPECT_EQ(s.dart_label, r.dart_label);
        EXPECT_EQ(s.roots, r.roots);
        EXPECT_EQ(s.out, r.out);
    }
    EXPECT_THROW(parse_realizer(fixture::k4(), "4 0 1\n"), GraphError);
    EXPECT_THROW(parse_realizer(fixture::k4(), "1 0 9\n"), GraphError);
}

TEST(LeafFaces, K4Assignment) {
    const PlaneGraph g = fixture::k4();
    const auto r = compute_realizer(g);
    const auto a = assign_leaves_to_faces(g, r);
    EXPECT_EQ(a.pairs.size(), 9u);
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
        const std::size_t deg = g.faces()[f].size();
        if (f == g.outer_face_index()) {
            EXPECT_EQ(a.by_face[f].size(), 6u);
            EXPECT_LE(a.by_face[f].size(), deg + 3);
        } else {
            EXPECT_EQ(a.by_face[f].size(), 1u);
            EXPECT_LE(a.by_face[f].size(), deg - 2);
        }
    }
    EXPECT_TRUE(check_face_assignment(g, a).ok());
}

TEST(LeafFaces, StackedSixAssignsEveryLeafOnce) {
    const PlaneGraph g = gen_stacked_triangulation({Family::StackedTriangulation, 6, 2});
    const auto r = compute_realizer(g);
    const auto c = leaf_census(r);
    const auto a = assign_leaves_to_faces(g, r);
    EXPECT_EQ(static_cast<int>(a.pairs.size()), c[0] + c[1] + c[2]);
    EXPECT_TRUE(check_face_assignment(g, a).ok());
}

TEST(LeafFaces, FaceAssignmentPropertiesOnFixtures) {
    for (const auto& g : fixtures()) {
        const auto a = assign_leaves_to_faces(g, compute_realizer(g));
        const auto c = check_face_assignment(g, a);
        EXPECT_TRUE(c.per_face_caps) << g.n();
        EXPECT_TRUE(c.no_duplicates) << g.n();
        EXPECT_TRUE(c.consecutive_same_tree) << g.n();
        EXPECT_TRUE(c.two_unassigned) << g.n();
    }
}

TEST(LeafFaces, AllPairsOnAnInteriorFaceShareOneTree) {
    for (const auto& g : fixtures()) {
        const auto a = assign_leaves_to_faces(g, compute_realizer(g));
        for (int f = 0; f < static_cast<int>(a.by_face.size()); ++f) {
            if (f == g.outer_face_index() || a.by_face[f].empty()) continue;
            const int k = a.pairs[a.by_face[f][0]].tree;
            for (int id : a.by_face[f]) EXPECT_EQ(a.pairs[id].tree, k) << g.n() << " face " << f;
        }
    }
}

TEST(LeafCensus, K4IsTight) {
    const auto c = leaf_census(compute_realizer(fixture::k4()));
    EXPECT_EQ(c, (std::array<int, 3>{3, 3, 3}));
    EXPECT_EQ(c[0] + c[1] + c[2], 2 * 4 + 1);
}

TEST(LeafCensus, TotalAtMostTwoNPlusOne) {
    for (int n = 4; n <= 50; ++n)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto r = compute_realizer(gen_stacked_triangulation({Family::StackedTriangulation, n, seed}));
            const auto c = leaf_census(r);
            EXPECT_LE(c[0] + c[1] + c[2], 2 * n + 1);
            EXPECT_LE(3 * c[min_leaf_tree(r) - 1], 2 * n + 1);
        }
}

TEST(PickMinLeafTree, TiesGoToSmallestIndex) { EXPECT_EQ(min_leaf_tree(compute_realizer(fixture::k4())), 1); }

TEST(PickMinLeafTree, PrismPicksCensusMinimizer) {
    const auto r = compute_realizer(fixture::prism());
    const auto c = leaf_census(r);
    const int k = min_leaf_tree(r);
    EXPECT_EQ(c[k - 1], *std::min_element(c.begin(), c.end()));
    EXPECT_EQ(&pick_min_leaf_tree(r), &r.tree(k));
}

TEST(PickMinLeafTree, OrderlyOnStackedTriangulations) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 4 + static_cast<int>(seed % 60);
        const PlaneGraph g = gen_stacked_triangulation({Family::StackedTriangulation, n, seed});
        const auto r = compute_realizer(g);
        EXPECT_TRUE(check_orderly(g, pick_min_leaf_tree(r)).empty()) << n << ' ' << seed;
    }
}
