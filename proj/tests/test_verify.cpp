#include <gtest/gtest.h>

#include "indeque/generators.hpp"
#include "indeque/verify.hpp"
#include "oracles.hpp"

using namespace indeque;

TEST(Verify, CertificateForCluster) {
  const auto g = disjoint_union(complete(3), path(2));
  const auto r = verify_indeque(g, std::vector<Vertex>{4, 0, 1, 2, 3});
  ASSERT_TRUE(std::holds_alternative<ClusterCertificate>(r));
  const auto& c = std::get<ClusterCertificate>(r);
  EXPECT_EQ(c.cliques, (std::vector<VertexSet>{{0, 1, 2}, {3, 4}}));
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(certificate_partition(c), (std::vector<int>{3, 2}));
  EXPECT_TRUE(certificate_valid(g, c));
}

TEST(Verify, WitnessForP3) {
  const auto r = verify_indeque(cycle(4), std::vector<Vertex>{0, 1, 2});
  ASSERT_TRUE(std::holds_alternative<P3Witness>(r));
  EXPECT_EQ(std::get<P3Witness>(r), (P3{0, 1, 2}));
  const auto r2 = verify_indeque(cycle(5), std::vector<Vertex>{1, 2, 3});
  EXPECT_EQ(std::get<P3Witness>(r2), (P3{1, 2, 3}));
  EXPECT_THROW(certify(cycle(4), std::vector<Vertex>{0, 1, 2}), Error);
}

TEST(Verify, EmptySetAndBadIds) {
  const auto r = verify_indeque(path(3), std::vector<Vertex>{});
  EXPECT_EQ(std::get<ClusterCertificate>(r).size(), 0u);
  EXPECT_THROW(verify_indeque(path(3), std::vector<Vertex>{3}), GraphError);
}

TEST(Verify, TamperedCertificatesFail) {
  const auto g = path(4);
  EXPECT_FALSE(certificate_valid(g, ClusterCertificate{{{0, 1}, {2, 3}}}));  // 1-2 joins them
  EXPECT_FALSE(certificate_valid(g, ClusterCertificate{{{0, 2}}}));          // not a clique
  EXPECT_FALSE(certificate_valid(g, ClusterCertificate{{{0, 1}, {1}}}));     // overlap
  EXPECT_FALSE(certificate_valid(g, ClusterCertificate{{{0, 4}}}));          // unknown vertex
  EXPECT_TRUE(certificate_valid(g, ClusterCertificate{{{0, 1}, {3}}}));
}

TEST(Verify, AgreesWithOracleOnRandomSubsets) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const auto g = random_graph(seed, n, 15 + static_cast<int>(seed % 70));
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if ((seed * 2654435761u >> (v % 31)) & 1u) s.push_back(v);
    const auto r = verify_indeque(g, s);
    const bool ok = oracle::is_indeque(g, s);
    EXPECT_EQ(std::holds_alternative<ClusterCertificate>(r), ok) << seed;
    EXPECT_EQ(is_indeque(g, s), ok);
    if (ok) {
      const auto& c = std::get<ClusterCertificate>(r);
      EXPECT_TRUE(certificate_valid(g, c));
      EXPECT_EQ(c.covered(), s);
    } else {
      const auto p = std::get<P3Witness>(r);
      EXPECT_TRUE(g.adjacent(p.a, p.b) && g.adjacent(p.b, p.c) && !g.adjacent(p.a, p.c));
    }
  }
}
