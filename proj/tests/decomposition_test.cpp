#include "pathreach/decomposition.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace pathreach {
namespace {

std::string ReadData(const std::string& name) {
    std::ifstream in(std::string(PATHREACH_DATA_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

WalkDecomposition TwoWalks() {
    return {{1, 6, 7, 2, 3, 4, 5, 10, 9, 8}, {1, 2, 3, 4, 9, 3, 8}};
}

TEST(Walk, Invariants) {
    EXPECT_THROW(Walk(std::vector<VertexId>{}), std::invalid_argument);
    EXPECT_THROW((Walk{1, 2, 2}), std::invalid_argument);
    EXPECT_TRUE((Walk{0, 1, 2}).is_simple());
    EXPECT_FALSE((Walk{0, 1, 0}).is_simple());
    EXPECT_TRUE((Walk{5}).is_simple());
    EXPECT_EQ((Walk{3, 4}).step(0), (Edge{3, 4}));
}

TEST(UnionGraph, TwoWalksHaveThirteenEdges) {
    const Digraph g = union_graph(TwoWalks(), 11);
    EXPECT_EQ(g.edge_count(), 13u);
    const std::vector<Edge> expected{{1, 2}, {1, 6}, {2, 3}, {3, 4}, {3, 8}, {4, 5}, {4, 9},
                                     {5, 10}, {6, 7}, {7, 2}, {9, 3}, {9, 8}, {10, 9}};
    EXPECT_EQ(g.edges(), expected);
}

TEST(UnionGraph, SmallCases) {
    EXPECT_EQ(union_graph({{0, 1, 2}}, 3).edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    const Digraph empty = union_graph({}, 4);
    EXPECT_EQ(empty.vertex_count(), 4u);
    EXPECT_EQ(empty.edge_count(), 0u);
    EXPECT_THROW(union_graph({{0, 5}}, 3), std::out_of_range);
}

TEST(ValidatePaths, ThreePaths) {
    const Digraph g = parse_graph(ReadData("three_paths.g"));
    const WalkDecomposition p = parse_decomposition(ReadData("three_paths.paths"));
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(union_graph(p, g.vertex_count()), g);
    const ValidationReport report = validate_path_decomposition(g, p);
    EXPECT_TRUE(report.ok());
}

TEST(ValidatePaths, UncoveredEdge) {
    const Digraph g(3, {{0, 1}, {1, 2}});
    const ValidationReport report = validate_path_decomposition(g, {{0, 1}});
    EXPECT_FALSE(report.ok());
    EXPECT_TRUE(report.contains(ViolationKind::EdgeUncovered, "(1,2)"));
}

TEST(ValidatePaths, RepeatedEdge) {
    const Digraph g(2, {{0, 1}});
    const ValidationReport report = validate_path_decomposition(g, {{0, 1}, {0, 1}});
    EXPECT_TRUE(report.contains(ViolationKind::EdgeRepeated));
    EXPECT_FALSE(report.contains(ViolationKind::EdgeUncovered));
}

TEST(ValidatePaths, CollectsEveryViolation) {
    const Digraph g(4, {{0, 1}, {1, 0}, {2, 3}});
    // Walk 0 is not simple, walk 1 uses a missing edge and repeats (0,1),
    // and (2,3) is never covered.
    const ValidationReport report = validate_path_decomposition(g, {{0, 1, 0}, {0, 1, 3}, {2}});
    EXPECT_TRUE(report.contains(ViolationKind::NotSimple, "walk 0"));
    EXPECT_TRUE(report.contains(ViolationKind::EdgeNotInGraph, "(1,3)"));
    EXPECT_TRUE(report.contains(ViolationKind::EdgeRepeated, "(0,1)"));
    EXPECT_TRUE(report.contains(ViolationKind::EdgeUncovered, "(2,3)"));
    EXPECT_EQ(report.violations.size(), 4u);
}

TEST(ValidatePaths, EmptyDecompositionOnlyFitsEdgelessGraphs) {
    EXPECT_TRUE(validate_path_decomposition(Digraph(3, {}), {}).ok());
    EXPECT_FALSE(validate_path_decomposition(Digraph(2, {{0, 1}}), {}).ok());
}

TEST(ValidatePaths, SingleVertexWalksAreIgnored) {
    const Digraph g(3, {{0, 1}});
    EXPECT_TRUE(validate_path_decomposition(g, {{0, 1}, {2}, {2}}).ok());
}

TEST(ValidateWalks, TwoWalks) {
    const WalkDecomposition w = TwoWalks();
    const Digraph g = union_graph(w, 11);
    EXPECT_TRUE(validate_walk_decomposition(g, w).ok());
    // Shared steps and the repeated vertex 3 make it fail as a path decomposition.
    const ValidationReport as_paths = validate_path_decomposition(g, w);
    EXPECT_TRUE(as_paths.contains(ViolationKind::NotSimple, "walk 1"));
    EXPECT_TRUE(as_paths.contains(ViolationKind::EdgeRepeated, "(2,3)"));
    EXPECT_TRUE(as_paths.contains(ViolationKind::EdgeRepeated, "(3,4)"));
}

TEST(ValidateWalks, OverlapAllowed) {
    const Digraph g(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(validate_walk_decomposition(g, {{0, 1, 2}, {0, 1}}).ok());
}

TEST(ValidateWalks, UncoveredAndForeignSteps) {
    const Digraph g(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(validate_walk_decomposition(g, {{0, 1}}).contains(ViolationKind::EdgeUncovered,
                                                                  "(1,2)"));
    const ValidationReport report = validate_walk_decomposition(g, {{0, 1, 2, 0}});
    EXPECT_TRUE(report.contains(ViolationKind::EdgeNotInGraph, "(2,0)"));
    // Out-of-range vertices are reported, not thrown.
    EXPECT_TRUE(validate_walk_decomposition(g, {{0, 1, 2, 9}})
                    .contains(ViolationKind::EdgeNotInGraph, "(2,9)"));
}

TEST(PathNumberLowerBound, Examples) {
    EXPECT_EQ(path_number_lower_bound(Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})), 2u);
    EXPECT_EQ(path_number_lower_bound(Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})), 1u);
    EXPECT_EQ(path_number_lower_bound(Digraph(3, {})), 0u);
    // Out-star: every leaf edge needs its own path.
    EXPECT_EQ(path_number_lower_bound(Digraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), 4u);
    // Cycles are balanced everywhere.
    EXPECT_EQ(path_number_lower_bound(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})), 0u);
}

TEST(DecompositionFormat, ParseAndWrite) {
    const WalkDecomposition w = parse_decomposition("# two walks\n0 1 2\r\n\n  3 1 \n5\n");
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0], (Walk{0, 1, 2}));
    EXPECT_EQ(w[1], (Walk{3, 1}));
    EXPECT_EQ(w[2], (Walk{5}));
    EXPECT_EQ(serialize_decomposition(w), "0 1 2\n3 1\n5\n");
    EXPECT_EQ(parse_decomposition(serialize_decomposition(w)), w);
    EXPECT_EQ(w.vertex_bound(), 6u);
    EXPECT_EQ(w.total_length(), 6u);
}

TEST(DecompositionFormat, Errors) {
    EXPECT_THROW(parse_decomposition("0 1 1\n"), ParseError);
    EXPECT_THROW(parse_decomposition("0 x\n"), ParseError);
    EXPECT_TRUE(parse_decomposition("# nothing\n\n").empty());
}

}  // namespace
}  // namespace pathreach
