#include <gtest/gtest.h>

#include "indeque/exact.hpp"
#include "indeque/forest.hpp"
#include "indeque/generators.hpp"
#include "oracles.hpp"

using namespace indeque;

TEST(Forest, SmallCases) {
  EXPECT_EQ(indeque_forest(Graph(0)).set.size(), 0u);
  EXPECT_EQ(indeque_forest(path(1)).set, (VertexSet{0}));
  EXPECT_EQ(indeque_forest(path(3)).set, (VertexSet{0, 2}));
  EXPECT_EQ(indeque_forest(path(9)).set.size(), 6u);
  EXPECT_EQ(indeque_forest(star(5)).set.size(), 5u);
}

TEST(Forest, CyclicInputCarriesCycle) {
  try {
    indeque_forest(disjoint_union(path(2), cycle(3)));
    FAIL();
  } catch (const CyclicInput& e) {
    EXPECT_EQ(e.cycle(), (std::vector<Vertex>{2, 3, 4}));
  }
}

TEST(Forest, FindCycleNormalises) {
  EXPECT_FALSE(find_cycle(path(5)));
  EXPECT_EQ(find_cycle(cycle(5)), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(normalize_cycle({3, 1, 4, 2}), (std::vector<Vertex>{1, 3, 2, 4}));
}

TEST(Forest, GuaranteeOnRandomForests) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = static_cast<int>(seed % 61);
    const auto f = random_forest(seed, n);
    const auto r = indeque_forest(f);
    EXPECT_TRUE(oracle::is_indeque(f, r.set)) << seed;
    EXPECT_GE(static_cast<int>(r.set.size()), forest_guarantee(n)) << seed;
    // Trace: steps partition V, each adds a subset of what it removes.
    std::vector<int> seen(n, 0);
    std::size_t added = 0;
    for (const auto& step : r.trace) {
      for (Vertex v : step.removed) ++seen[v];
      for (Vertex v : step.added) EXPECT_TRUE(std::binary_search(step.removed.begin(), step.removed.end(), v));
      EXPECT_GE(3 * step.added.size(), 2 * step.removed.size());
      added += step.added.size();
    }
    EXPECT_EQ(added, r.set.size());
    for (int c : seen) EXPECT_EQ(c, 1);
    if (n <= 15) EXPECT_LE(static_cast<int>(r.set.size()), solve(f).value);
  }
}

TEST(Forest, PathsAreTight) {
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(static_cast<int>(indeque_forest(path(n)).set.size()), forest_guarantee(n)) << n;
}
