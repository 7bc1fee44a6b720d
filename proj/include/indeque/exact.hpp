#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "indeque/bitset.hpp"
#include "indeque/graph.hpp"
#include "indeque/verify.hpp"

namespace indeque {

struct SolveStats {
  std::uint64_t nodes = 0;
  std::int64_t ms = 0;
};

struct SolveResult {
  int value = 0;
  ClusterCertificate certificate;
  bool optimal = true;
  SolveStats stats;
};

namespace detail {

// Subset enumeration needs a 64-bit mask.
inline constexpr int kMaskLimit = 62;

inline void check_oracle_size(const Graph& g, int limit) {
  if (g.order() > std::min(limit, kMaskLimit)) throw LimitExceeded(g.order(), std::min(limit, kMaskLimit));
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
  return adj;
}

// G[mask] is a cluster graph iff every vertex has the same closed
// neighbourhood (inside the mask) as each of its neighbours.
inline bool mask_is_cluster(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const std::uint64_t closed = (adj[v] & mask) | (std::uint64_t{1} << v);
    for (std::uint64_t nb = adj[v] & mask; nb; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      if (((adj[u] & mask) | (std::uint64_t{1} << u)) != closed) return false;
    }
  }
  return true;
}

// For equal-size sets, a's sorted id sequence precedes b's iff the least
// differing id belongs to a.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  return d && (a & (d & (~d + 1)));
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

inline std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace detail

// Maximum indeque set by checking all 2^n subsets. The certificate covers
// the lexicographically least maximum set.
inline SolveResult brute_force(const Graph& g, int limit = kDefaultOracleLimit) {
  detail::check_oracle_size(g, limit);
  const auto start = std::chrono::steady_clock::now();
  const auto adj = detail::adjacency_masks(g);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  int best = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int size = std::popcount(mask);
    if (size < best) continue;
    if (size == best && !detail::mask_lex_less(mask, best_mask)) continue;
    if (!detail::mask_is_cluster(adj, mask)) continue;
    best = size;
    best_mask = mask;
  }
  SolveResult r;
  r.value = best;
  r.certificate = certify(g, detail::mask_to_set(best_mask));
  r.stats.nodes = total;
  r.stats.ms = detail::elapsed_ms(start);
  return r;
}

struct MaximumSets {
  int value = 0;
  // Certificates in lexicographic order of their covered sets.
  std::vector<ClusterCertificate> sets;
  // Number of maximum sets that exist; more than sets.size() when the cap
  // was exhausted.
  std::size_t total = 0;
  bool cap_exhausted() const { return total > sets.size(); }
};

inline MaximumSets enumerate_maximum_sets(const Graph& g, std::size_t cap,
                                          int limit = kDefaultOracleLimit) {
  detail::check_oracle_size(g, limit);
  const auto adj = detail::adjacency_masks(g);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  int best = -1;
  std::vector<std::uint64_t> found;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int size = std::popcount(mask);
    if (size < best || !detail::mask_is_cluster(adj, mask)) continue;
    if (size > best) {
      best = size;
      found.clear();
    }
    found.push_back(mask);
  }
  std::sort(found.begin(), found.end(), detail::mask_lex_less);
  MaximumSets out;
  out.value = best;
  out.total = found.size();
  for (std::size_t k = 0; k < found.size() && k < cap; ++k)
    out.sets.push_back(certify(g, detail::mask_to_set(found[k])));
  return out;
}

// Distinct clique-size partitions realised by the given certificates,
// each descending, listed in descending lexicographic order.
inline std::vector<std::vector<int>> achievable_partitions(const std::vector<ClusterCertificate>& sets) {
  std::vector<std::vector<int>> parts;
  for (const auto& c : sets) parts.push_back(certificate_partition(c));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return parts;
}

namespace detail {

// Branch and bound over deletion sets. Whenever G[alive] has an induced P3
// one of its three vertices must go, so the search branches three ways on
// the lexicographically least P3 (centre first). Clique components are kept
// as they are, independent non-clique components are solved separately, and
// a greedy packing of vertex-disjoint P3s bounds the number of further
// deletions from below.
class ClusterSearch {
 public:
  explicit ClusterSearch(const Graph& g) : adj_(adjacency_bits(g)), n_(g.order()) {}

  Bitset solve(const Bitset& alive) {
    Bitset result(n_);
    for (auto& comp : components(alive)) {
      if (is_clique(comp))
        result |= comp;
      else
        result |= solve_connected(comp);
    }
    return result;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Incumbent {
    int size = -1;
    Bitset set;
  };

  Bitset solve_connected(const Bitset& comp) {
    Incumbent best;
    search(comp, best);
    return best.set;
  }

  void search(const Bitset& alive, Incumbent& best) {
    const int size = static_cast<int>(alive.count());
    if (size - packing_bound(alive) <= best.size) return;

    auto comps = components(alive);
    Bitset settled(n_);
    std::vector<Bitset> open;
    for (auto& c : comps) {
      if (is_clique(c))
        settled |= c;
      else
        open.push_back(std::move(c));
    }
    if (open.size() != 1) {
      for (const auto& c : open) settled |= solve_connected(c);
      const int value = static_cast<int>(settled.count());
      if (value > best.size) best = {value, std::move(settled)};
      return;
    }

    ++nodes_;
    const P3 p = *least_p3(alive);
    for (Vertex x : {p.b, p.a, p.c}) {
      Bitset child = alive;
      child.reset(static_cast<std::size_t>(x));
      search(child, best);
    }
  }

  std::vector<Bitset> components(const Bitset& alive) const {
    std::vector<Bitset> out;
    Bitset todo = alive;
    for (std::size_t s = todo.first(); s != Bitset::npos; s = todo.first()) {
      Bitset comp(n_);
      Bitset frontier(n_);
      frontier.set(s);
      while (frontier.any()) {
        comp |= frontier;
        Bitset grow(n_);
        frontier.for_each([&](std::size_t v) { grow |= adj_[v]; });
        grow &= alive;
        grow -= comp;
        frontier = std::move(grow);
      }
      todo -= comp;
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool is_clique(const Bitset& comp) const {
    const std::size_t k = comp.count();
    bool ok = true;
    comp.for_each([&](std::size_t v) { ok = ok && adj_[v].count_and(comp) + 1 == k; });
    return ok;
  }

  std::optional<P3> least_p3(const Bitset& alive) const {
    for (std::size_t a = alive.first(); a != Bitset::npos; a = alive.next(a + 1)) {
      const Bitset na = adj_[a] & alive;
      for (std::size_t b = na.first(); b != Bitset::npos; b = na.next(b + 1)) {
        const std::size_t c = ((adj_[b] & alive) - adj_[a]).next(a + 1);
        if (c != Bitset::npos) return P3{static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)};
      }
    }
    return std::nullopt;
  }

  // Greedy vertex-disjoint induced P3 packing, triples in lexicographic order.
  int packing_bound(const Bitset& alive) const {
    Bitset used(n_);
    int count = 0;
    for (std::size_t a = alive.first(); a != Bitset::npos; a = alive.next(a + 1)) {
      if (used.test(a)) continue;
      const Bitset na = (adj_[a] & alive) - used;
      for (std::size_t b = na.first(); b != Bitset::npos; b = na.next(b + 1)) {
        const std::size_t c = (((adj_[b] & alive) - adj_[a]) - used).next(a + 1);
        if (c == Bitset::npos) continue;
        used.set(a);
        used.set(b);
        used.set(c);
        ++count;
        break;
      }
    }
    return count;
  }

  std::vector<Bitset> adj_;
  std::size_t n_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Exact indeque number by branch and bound; agrees with brute_force on the
// value, not necessarily on the witness.
inline SolveResult solve(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  detail::ClusterSearch search(g);
  const Bitset best = search.solve(Bitset::full(g.order()));
  VertexSet s;
  best.for_each([&](std::size_t v) { s.push_back(static_cast<Vertex>(v)); });
  SolveResult r;
  r.value = static_cast<int>(s.size());
  r.certificate = certify(g, s);
  r.stats.nodes = search.nodes();
  r.stats.ms = detail::elapsed_ms(start);
  return r;
}

}  // namespace indeque
