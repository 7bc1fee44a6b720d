#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indeque/bitset.hpp"
#include "indeque/errors.hpp"

namespace indeque {

using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline constexpr int kDefaultOracleLimit = 20;

// Simple undirected graph on vertices 0..n-1. Immutable once built; the
// neighbour lists are sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n)) {}

  static Graph from_edge_list(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("vertex id out of range in edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  // δ(G); 0 for the empty graph.
  int min_degree() const {
    int d = order() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }

  // Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  bool operator==(const Graph&) const = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    return static_cast<std::size_t>(n);
  }

  std::vector<std::vector<Vertex>> adj_;
};

// Adjacency rows as bitsets; row v excludes v itself.
inline std::vector<Bitset> adjacency_bits(const Graph& g) {
  std::vector<Bitset> rows(g.order(), Bitset(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) rows[v].set(u);
  return rows;
}

inline VertexSet normalized(std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct InducedSubgraph {
  Graph graph;
  // to_new[old] is the new id, or -1 when old is not in the set.
  std::vector<Vertex> to_new;
  // to_old[new] is the original id; ascending.
  std::vector<Vertex> to_old;
};

// G[S]. New ids follow the ascending order of the original ids, so any
// order-based tie-break on the subgraph agrees with the host graph.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph out;
  out.to_old = normalized(s);
  out.to_new.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.to_old.size(); ++i) {
    Vertex v = out.to_old[i];
    if (!g.contains(v)) throw GraphError("vertex id " + std::to_string(v) + " out of range");
    out.to_new[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : out.to_old)
    for (Vertex u : g.neighbors(v))
      if (v < u && out.to_new[u] >= 0) edges.emplace_back(out.to_new[v], out.to_new[u]);
  out.graph = Graph::from_edge_list(static_cast<int>(out.to_old.size()), edges);
  return out;
}

struct P3 {
  Vertex a, b, c;
  bool operator==(const P3&) const = default;
};

// Lexicographically least (a,b,c), a < c, with ab and bc edges and ac a
// non-edge; nullopt iff g is a disjoint union of cliques.
inline std::optional<P3> find_induced_p3(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a))
      for (Vertex c : g.neighbors(b))
        if (c > a && !g.adjacent(a, c)) return P3{a, b, c};
  return std::nullopt;
}

// Components as sorted vertex lists, ordered by least member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// g1 ⊎ g2 with g2's ids shifted by |g1|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  auto edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + g1.order(), v + g1.order());
  return Graph::from_edge_list(g1.order() + g2.order(), edges);
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edge_list(g.order(), edges);
}

inline Graph remove_vertex(const Graph& g, Vertex v) {
  VertexSet keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep).graph;
}

namespace detail {

inline void max_clique(const std::vector<Bitset>& adj, int size, Bitset cand, int& best) {
  if (size + static_cast<int>(cand.count()) <= best) return;
  std::size_t v = cand.first();
  if (v == Bitset::npos) {
    best = size;
    return;
  }
  cand.reset(v);
  max_clique(adj, size + 1, cand & adj[v], best);
  max_clique(adj, size, std::move(cand), best);
}

inline int clique_number(const Graph& g) {
  int best = 0;
  max_clique(adjacency_bits(g), 0, Bitset::full(g.order()), best);
  return best;
}

}  // namespace detail

// ω(G) by exhaustive branching; refuses graphs above `limit` vertices.
inline int omega_brute(const Graph& g, int limit = kDefaultOracleLimit) {
  if (g.order() > limit) throw LimitExceeded(g.order(), limit);
  return detail::clique_number(g);
}

// α(G) = ω(complement of G).
inline int alpha_brute(const Graph& g, int limit = kDefaultOracleLimit) {
  if (g.order() > limit) throw LimitExceeded(g.order(), limit);
  return detail::clique_number(complement(g));
}

}  // namespace indeque
