#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

// A vertex set S together with its decomposition into the cliques of G[S].
// Normalised: each clique ascending, cliques ordered by least element.
struct ClusterCertificate {
  std::vector<VertexSet> cliques;

  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& c : cliques) s += c.size();
    return s;
  }

  VertexSet covered() const {
    VertexSet out;
    for (const auto& c : cliques) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const ClusterCertificate&) const = default;
};

// Refutation: a, b, c in the tested set with ab, bc edges and ac missing.
using P3Witness = P3;

using VerifyResult = std::variant<ClusterCertificate, P3Witness>;

inline bool is_cluster(const Graph& g) { return !find_induced_p3(g).has_value(); }

namespace detail {

inline ClusterCertificate normalize(std::vector<VertexSet> cliques) {
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::erase_if(cliques, [](const VertexSet& c) { return c.empty(); });
  std::sort(cliques.begin(), cliques.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return ClusterCertificate{std::move(cliques)};
}

}  // namespace detail

// Decides whether G[S] is a disjoint union of cliques. The certificate lists
// the components of G[S]; on failure the witness is the lexicographically
// least induced P3 of G[S], in host ids.
inline VerifyResult verify_indeque(const Graph& g, std::span<const Vertex> s) {
  auto sub = induced_subgraph(g, s);
  std::vector<VertexSet> cliques;
  for (auto& comp : connected_components(sub.graph)) {
    const auto k = comp.size();
    for (Vertex v : comp) {
      if (static_cast<std::size_t>(sub.graph.degree(v)) != k - 1) {
        auto p = *find_induced_p3(sub.graph);
        return P3Witness{sub.to_old[p.a], sub.to_old[p.b], sub.to_old[p.c]};
      }
    }
    for (auto& v : comp) v = sub.to_old[v];
    cliques.push_back(std::move(comp));
  }
  return detail::normalize(std::move(cliques));
}

inline bool is_indeque(const Graph& g, std::span<const Vertex> s) {
  return std::holds_alternative<ClusterCertificate>(verify_indeque(g, s));
}

// Clique sizes, descending.
inline std::vector<int> certificate_partition(const ClusterCertificate& c) {
  std::vector<int> sizes;
  for (const auto& q : c.cliques) sizes.push_back(static_cast<int>(q.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

// Re-validation from scratch: normalised, pairwise disjoint, each set a
// clique, no edge between different sets.
inline bool certificate_valid(const Graph& g, const ClusterCertificate& c) {
  std::vector<int> owner(g.order(), -1);
  Vertex prev_front = -1;
  for (std::size_t k = 0; k < c.cliques.size(); ++k) {
    const auto& q = c.cliques[k];
    if (q.empty() || !std::is_sorted(q.begin(), q.end())) return false;
    if (q.front() <= prev_front) return false;
    prev_front = q.front();
    for (Vertex v : q) {
      if (!g.contains(v) || owner[v] != -1) return false;
      owner[v] = static_cast<int>(k);
    }
  }
  for (std::size_t k = 0; k < c.cliques.size(); ++k) {
    const auto& q = c.cliques[k];
    for (std::size_t x = 0; x < q.size(); ++x)
      for (std::size_t y = x + 1; y < q.size(); ++y)
        if (!g.adjacent(q[x], q[y])) return false;
    for (Vertex v : q)
      for (Vertex u : g.neighbors(v))
        if (owner[u] != -1 && owner[u] != static_cast<int>(k)) return false;
  }
  return true;
}

// Certificate for a set already known to be indeque; throws otherwise.
inline ClusterCertificate certify(const Graph& g, std::span<const Vertex> s) {
  auto r = verify_indeque(g, s);
  if (auto* c = std::get_if<ClusterCertificate>(&r)) return std::move(*c);
  auto w = std::get<P3Witness>(r);
  throw Error("set is not indeque: induced P3 " + std::to_string(w.a) + "-" +
              std::to_string(w.b) + "-" + std::to_string(w.c));
}

}  // namespace indeque
