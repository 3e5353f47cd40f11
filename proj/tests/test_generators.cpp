#include <gtest/gtest.h>

#include "segdraw/generators.hpp"

using namespace segdraw;

TEST(SplitMix64, ReferenceOutputs) {
    SplitMix64 r(0);
    EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
    SplitMix64 s(1234567);
    EXPECT_EQ(s.next(), 0x599ED017FB08FC85ULL);
    EXPECT_EQ(s.next(), 0x2C73F08458540FA5ULL);
}

TEST(SplitMix64, BelowStaysInRange) {
    SplitMix64 r(99);
    for (std::uint64_t k = 1; k < 500; ++k) EXPECT_LT(r.below(k), k);
}

TEST(GenTree, RandomTreeFrozenParents) {
    const auto t = gen_rooted_tree({Family::RandomTree, 10, 7});
    EXPECT_EQ(t.parent, (std::vector<int>{-1, 0, 0, 2, 2, 2, 1, 3, 2, 1}));
}

TEST(GenTree, PathOfFive) {
    const auto t = gen_rooted_tree({Family::Path, 5, 3});
    EXPECT_EQ(t.parent, (std::vector<int>{-1, 0, 1, 2, 3}));
}

TEST(GenTree, StarSixIsK15) {
    const auto t = gen_rooted_tree({Family::Star, 6, 3});
    EXPECT_EQ(t.children[0].size(), 5u);
    EXPECT_EQ(t.leaf_count(), 5);
}

TEST(GenTree, Deterministic) {
    EXPECT_EQ(gen_tree({Family::RandomTree, 50, 7}).graph.edges(), gen_tree({Family::RandomTree, 50, 7}).graph.edges());
    EXPECT_NE(gen_tree({Family::RandomTree, 50, 7}).graph.edges(), gen_tree({Family::RandomTree, 50, 8}).graph.edges());
    EXPECT_EQ(generate_text({Family::StackedTriangulation, 40, 2}), generate_text({Family::StackedTriangulation, 40, 2}));
}

TEST(GenTree, CaterpillarAndSpiderShapes) {
    const auto c = gen_rooted_tree({Family::Caterpillar, 21, 4});
    c.validate();
    for (int v = 11; v < 21; ++v) {
        EXPECT_LT(c.parent[v], 11);
        EXPECT_TRUE(c.is_leaf(v));
    }
    const auto s = gen_rooted_tree({Family::Spider, 26, 0});
    s.validate();
    EXPECT_EQ(s.children[0].size(), 5u);
    for (int v = 1; v < 26; ++v) EXPECT_LE(s.children[v].size(), 1u);
}

TEST(GenTree, RejectsEmptyAndGraphFamilies) {
    EXPECT_THROW(gen_rooted_tree({Family::RandomTree, 0, 0}), GraphError);
    EXPECT_THROW(gen_rooted_tree({Family::Wheel, 6, 0}), GraphError);
}

TEST(StackedTriangulation, FourIsK4) {
    const PlaneGraph g = gen_stacked_triangulation({Family::StackedTriangulation, 4, 9});
    EXPECT_EQ(g.n(), 4);
    EXPECT_EQ(g.m(), 6);
    EXPECT_EQ(check_connectivity(g, 3), Connectivity::Yes);
}

TEST(StackedTriangulation, FiveAndThirtyAreThreeConnected) {
    EXPECT_EQ(check_connectivity(gen_stacked_triangulation({Family::StackedTriangulation, 5, 1}), 3), Connectivity::Yes);
    EXPECT_EQ(check_connectivity(gen_stacked_triangulation({Family::StackedTriangulation, 30, 42}), 3),
              Connectivity::Yes);
}

TEST(StackedTriangulation, EdgeCountAndFaces) {
    for (int n = 4; n <= 80; ++n) {
        const PlaneGraph g = gen_stacked_triangulation({Family::StackedTriangulation, n, static_cast<std::uint64_t>(n)});
        EXPECT_EQ(g.m(), 3 * n - 6);
        for (const auto& f : g.faces()) EXPECT_EQ(f.size(), 3u);
    }
}

TEST(FixedFamilies, PrismAndWheel) {
    const PlaneGraph p = gen_prism(10);
    EXPECT_EQ(p.m(), 15);
    EXPECT_EQ(p.outer_face().size(), 5u);
    EXPECT_EQ(check_connectivity(p, 3), Connectivity::Yes);
    const PlaneGraph w = gen_wheel(7);
    EXPECT_EQ(w.m(), 12);
    EXPECT_EQ(w.outer_face().size(), 6u);
    EXPECT_EQ(check_connectivity(w, 3), Connectivity::Yes);
    EXPECT_THROW(gen_prism(7), GraphError);
    EXPECT_THROW(gen_wheel(3), GraphError);
}

TEST(Families, NamesRoundTrip) {
    for (Family f : {Family::RandomTree, Family::Path, Family::Star, Family::Caterpillar, Family::Spider,
                     Family::StackedTriangulation, Family::Prism, Family::Wheel})
        EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_THROW(parse_family("torus"), GraphError);
}

TEST(GenerateText, ParsesBack) {
    for (Family f : {Family::RandomTree, Family::Spider, Family::StackedTriangulation, Family::Prism, Family::Wheel}) {
        const std::string text = generate_text({f, 12, 5});
        EXPECT_NO_THROW(is_tree_family(f) ? (void)parse_tree(text) : (void)parse_graph(text)) << family_name(f);
    }
}
