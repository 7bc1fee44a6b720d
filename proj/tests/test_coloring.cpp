#include <gtest/gtest.h>

#include "indeque/coloring.hpp"
#include "indeque/generators.hpp"
#include "oracles.hpp"

using namespace indeque;

namespace {

// Independent acyclicity check: every pair of classes induces a forest.
bool acyclic(const Graph& g, const AcyclicColoring& col) {
  const auto m = oracle::matrix(g);
  for (const auto& cls : col.classes)
    if (!oracle::independent(m, cls)) return false;
  for (std::size_t a = 0; a < col.classes.size(); ++a)
    for (std::size_t b = a + 1; b < col.classes.size(); ++b) {
      VertexSet both = col.classes[a];
      both.insert(both.end(), col.classes[b].begin(), col.classes[b].end());
      if (!oracle::is_forest(induced_subgraph(g, both).graph)) return false;
    }
  return true;
}

}  // namespace

TEST(Coloring, DetectsViolations) {
  const auto c4 = cycle(4);
  const auto mono = verify_acyclic_coloring(c4, AcyclicColoring::from_colors({0, 0, 1, 2}));
  ASSERT_TRUE(mono);
  EXPECT_EQ(std::get<MonochromaticEdge>(*mono).u, 0);
  const auto bicycle = verify_acyclic_coloring(c4, AcyclicColoring::from_colors({0, 1, 0, 1}));
  ASSERT_TRUE(bicycle);
  EXPECT_EQ(std::get<BicoloredCycle>(*bicycle).cycle, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(verify_acyclic_coloring(c4, AcyclicColoring::from_colors({0, 1, 0, 2})));
  EXPECT_THROW(verify_acyclic_coloring(c4, AcyclicColoring{{{0, 1}, {2}}}), InvalidColoring);
  EXPECT_THROW(verify_acyclic_coloring(c4, AcyclicColoring{{{0, 2}, {2, 1, 3}}}), InvalidColoring);
}

TEST(Coloring, GreedyIsAcyclic) {
  EXPECT_EQ(greedy_acyclic_coloring(complete(4)).class_count(), 4);
  EXPECT_FALSE(verify_acyclic_coloring(apexiated_octahedron(), greedy_acyclic_coloring(apexiated_octahedron())));
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = random_graph(seed, 1 + static_cast<int>(seed % 20), 5 + static_cast<int>(seed % 40));
    const auto col = greedy_acyclic_coloring(g);
    EXPECT_TRUE(acyclic(g, col)) << seed;
    EXPECT_FALSE(verify_acyclic_coloring(g, col));
  }
  std::vector<Vertex> order{4, 3, 2, 1, 0};
  EXPECT_FALSE(verify_acyclic_coloring(cycle(5), greedy_acyclic_coloring(cycle(5), order)));
  EXPECT_THROW(greedy_acyclic_coloring(cycle(5), std::vector<Vertex>{0, 1}), GraphError);
}

TEST(Coloring, VerifierAgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const auto g = random_graph(seed, n, 25);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = static_cast<int>((seed * 31 + v * 7) % 3);
    const auto col = AcyclicColoring::from_colors(colors);
    EXPECT_EQ(!verify_acyclic_coloring(g, col).has_value(), acyclic(g, col)) << seed;
  }
}

TEST(Coloring, PipelineMeetsBounds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 40);
    const auto g = random_graph(seed, n, 8);
    const auto col = greedy_acyclic_coloring(g);
    const auto r = indeque_via_coloring(g, col);
    const int c = std::max(col.class_count(), 2);
    EXPECT_GE(static_cast<int>(r.forest.size()) * c, 2 * n) << seed;
    EXPECT_TRUE(oracle::is_forest(induced_subgraph(g, r.forest).graph));
    EXPECT_TRUE(oracle::is_indeque(g, r.set));
    EXPECT_GE(static_cast<int>(r.set.size()), r.guarantee);
    EXPECT_EQ(r.guarantee, coloring_guarantee(n, col.class_count()));
  }
  EXPECT_EQ(coloring_guarantee(15, 5), 4);  // ceil(2/3 * 6)
  EXPECT_EQ(coloring_guarantee(10, 1), 7);  // one class counts as two
}

TEST(Coloring, ParseAndSerialize) {
  const auto col = parse_coloring("# c\n0 5\n1 2\n2 5\n", 3);
  EXPECT_EQ(col.classes, (std::vector<VertexSet>{{1}, {0, 2}}));
  EXPECT_EQ(serialize_coloring(col, 3), "0 1\n1 0\n2 1\n");
  EXPECT_THROW(parse_coloring("0 1\n", 2), InvalidColoring);
  EXPECT_THROW(parse_coloring("0 1\n0 2\n1 1\n", 2), InvalidColoring);
  EXPECT_THROW(parse_coloring("0 1\n5 1\n", 2), ParseError);
  EXPECT_THROW(parse_coloring("0\n", 1), ParseError);
}
