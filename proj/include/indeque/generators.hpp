#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

namespace detail {

// Deterministic across standard libraries: mt19937_64 is fully specified,
// and we avoid the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Uniform-ish in [0, k).
  int below(int k) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(k)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int percent) { return below(100) < percent; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<int>(i))]);
  }

 private:
  std::mt19937_64 eng_;
};

inline Graph relabel(int n, const std::vector<Edge>& edges, const std::vector<Vertex>& perm) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(n, out);
}

}  // namespace detail

inline Graph path(int n) {
  if (n < 0) throw GraphError("path needs n >= 0");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, e);
}

inline Graph complete(int n) {
  if (n < 0) throw GraphError("complete graph needs n >= 0");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

// K_{1,leaves}; the centre is vertex 0.
inline Graph star(int leaves) {
  if (leaves < 0) throw GraphError("star needs k >= 0 leaves");
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edge_list(leaves + 1, e);
}

// n disjoint edges (2i,2i+1) plus n isolated vertices 2n..3n-1.
inline Graph matching_with_isolated(int n) {
  if (n < 1) throw GraphError("matching family needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edge_list(3 * n, e);
}

// Coordinates of the triangular grid T_n: points (i,j), i,j >= 0,
// i + j <= n, numbered row by row (j ascending, then i ascending).
class TriangularGridCoords {
 public:
  explicit TriangularGridCoords(int side) : side_(side) {
    if (side < 0) throw GraphError("triangular grid needs n >= 0");
  }

  int side() const { return side_; }
  int size() const { return (side_ + 1) * (side_ + 2) / 2; }

  bool contains(int i, int j) const { return i >= 0 && j >= 0 && i + j <= side_; }

  Vertex id(int i, int j) const { return row_offset(j) + i; }

  std::pair<int, int> coord(Vertex v) const {
    int j = 0;
    while (row_offset(j + 1) <= v) ++j;
    return {v - row_offset(j), j};
  }

 private:
  int row_offset(int j) const { return j * (side_ + 1) - j * (j - 1) / 2; }

  int side_;
};

struct TriangularGrid {
  Graph graph;
  TriangularGridCoords coords;
};

// (i,j) ~ (i',j') iff same row and |i-i'| = 1, same column and |j-j'| = 1,
// or i-i' = j'-j = ±1.
inline TriangularGrid triangular_grid(int n) {
  TriangularGridCoords tc(n);
  std::vector<Edge> e;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i + j <= n; ++i) {
      const Vertex v = tc.id(i, j);
      if (tc.contains(i + 1, j)) e.emplace_back(v, tc.id(i + 1, j));
      if (tc.contains(i, j + 1)) e.emplace_back(v, tc.id(i, j + 1));
      if (tc.contains(i + 1, j - 1)) e.emplace_back(v, tc.id(i + 1, j - 1));
    }
  }
  return {Graph::from_edge_list(tc.size(), e), tc};
}

// Octahedron on 0..5 (antipodal pairs {0,1},{2,3},{4,5}) with an apex
// 6..9 on each face of the colour class containing {0,2,4}.
inline Graph apexiated_octahedron() {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (a / 2 != b / 2) e.emplace_back(a, b);
  constexpr std::array<std::array<Vertex, 3>, 4> faces{{{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}}};
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (Vertex x : faces[f]) e.emplace_back(static_cast<Vertex>(6 + f), x);
  return Graph::from_edge_list(10, e);
}

namespace detail {

// Adds, in id order, every vertex whose neighbours inside `in` form exactly
// one whole cluster (or are empty). Keeps `in` indeque.
inline void extend_to_maximal(const Graph& g, std::vector<char>& in) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    VertexSet nb;
    for (Vertex u : g.neighbors(v))
      if (in[u]) nb.push_back(u);
    bool ok = true;
    if (!nb.empty()) {
      VertexSet cluster{nb.front()};
      for (Vertex u : g.neighbors(nb.front()))
        if (in[u]) cluster.push_back(u);
      std::sort(cluster.begin(), cluster.end());
      ok = cluster == nb;
    }
    if (ok) in[v] = 1;
  }
}

}  // namespace detail

// An indeque set of T_n with at least ceil(2|T_n|/5) vertices.
//
// On the infinite lattice the points with (i + 3j) mod 5 in {r, r+1} induce
// disjoint edges: every neighbour offset changes i + 3j by ±1, ±2 or ±3, and
// only the (±1, 0) offset stays inside the residue pair. Each point lies in
// exactly two of the five shifts, so the best shift restricted to T_n has at
// least 2|T_n|/5 points. The chosen shift is then greedily extended.
inline VertexSet triangular_indeque_pattern(int n) {
  auto grid = triangular_grid(n);
  const auto& tc = grid.coords;
  int best_shift = 0;
  int best_count = -1;
  for (int r = 0; r < 5; ++r) {
    int count = 0;
    for (Vertex v = 0; v < tc.size(); ++v) {
      auto [i, j] = tc.coord(v);
      const int res = ((i + 3 * j - r) % 5 + 5) % 5;
      if (res <= 1) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best_shift = r;
    }
  }
  std::vector<char> in(tc.size(), 0);
  for (Vertex v = 0; v < tc.size(); ++v) {
    auto [i, j] = tc.coord(v);
    in[v] = ((i + 3 * j - best_shift) % 5 + 5) % 5 <= 1;
  }
  detail::extend_to_maximal(grid.graph, in);
  VertexSet out;
  for (Vertex v = 0; v < tc.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

// Random forest on n vertices: each vertex gets at most one earlier parent,
// then ids are shuffled.
inline Graph random_forest(std::uint64_t seed, int n) {
  if (n < 0) throw GraphError("random forest needs n >= 0");
  detail::Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v)
    if (!rng.chance(12)) e.emplace_back(rng.below(v), v);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return detail::relabel(n, e, perm);
}

// G(n, p) with p = percent / 100.
inline Graph random_graph(std::uint64_t seed, int n, int percent) {
  if (n < 0) throw GraphError("random graph needs n >= 0");
  detail::Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(percent)) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

// Random graph on exactly `size_budget` vertices whose 2-connected blocks
// each consist of a cycle v_1..v_k, w_l..w_1 plus non-crossing chords and
// length-2 paths between the v-side and the w-side. Blocks and pendant
// trees hang off cycle vertices (or tree vertices) only. A negative
// `cpath_budget` means unlimited; zero yields cycles and trees only.
inline Graph random_pw2(std::uint64_t seed, int size_budget, int cpath_budget = -1) {
  if (size_budget < 0) throw GraphError("random_pw2 needs a non-negative size budget");
  detail::Rng rng(seed);
  int next = 0;
  std::vector<Edge> edges;
  std::set<Edge> edge_set;
  std::vector<Vertex> anchors;

  auto add_edge = [&](Vertex a, Vertex b) {
    Edge e{std::min(a, b), std::max(a, b)};
    if (edge_set.insert(e).second) edges.push_back(e);
  };

  while (next < size_budget) {
    const int remaining = size_budget - next;
    const int roll = rng.below(100);
    const bool glue = !anchors.empty() && rng.chance(85);
    const int min_new = glue ? 2 : 3;

    if (roll < 5 || (remaining < min_new && anchors.empty())) {
      anchors.push_back(next++);
      continue;
    }
    if (roll < 30 || remaining < min_new) {
      if (anchors.empty()) {
        anchors.push_back(next++);
        continue;
      }
      const Vertex v = next++;
      add_edge(anchors[rng.below(static_cast<int>(anchors.size()))], v);
      anchors.push_back(v);
      continue;
    }

    // A structured block. Small cycles are common so that diamonds and
    // triangles show up as leaf blocks.
    const int max_len = std::min(10, glue ? remaining + 1 : remaining);
    const int len = rng.chance(40) ? rng.between(3, std::min(4, max_len)) : rng.between(3, max_len);
    const int k = rng.between(1, len - 1);
    const int l = len - k;
    std::vector<Vertex> cyc(len);
    const int glue_pos = glue ? rng.below(len) : -1;
    for (int p = 0; p < len; ++p)
      cyc[p] = p == glue_pos ? anchors[rng.below(static_cast<int>(anchors.size()))] : next++;
    for (int p = 0; p < len; ++p) add_edge(cyc[p], cyc[(p + 1) % len]);
    // cyc = v_1..v_k, w_l..w_1
    auto vv = [&](int i) { return cyc[i - 1]; };
    auto ww = [&](int j) { return cyc[len - j]; };

    int i = 1, j = 1;
    while (i <= k && j <= l && cpath_budget != 0) {
      if (rng.chance(45)) {
        // A length-2 path beside a cycle edge would lengthen the cycle.
        const bool beside_edge = (i == 1 && j == 1) || (i == k && j == l);
        const bool want_internal = rng.chance(40) && next < size_budget && !beside_edge;
        const Edge chord{std::min(vv(i), ww(j)), std::max(vv(i), ww(j))};
        if (want_internal) {
          const Vertex x = next++;
          add_edge(vv(i), x);
          add_edge(x, ww(j));
          if (cpath_budget > 0) --cpath_budget;
        } else if (!edge_set.contains(chord)) {
          add_edge(vv(i), ww(j));
          if (cpath_budget > 0) --cpath_budget;
        }
      }
      switch (rng.below(3)) {
        case 0: ++i; break;
        case 1: ++j; break;
        default: ++i, ++j; break;
      }
    }
    for (Vertex v : cyc)
      if (std::find(anchors.begin(), anchors.end(), v) == anchors.end()) anchors.push_back(v);
  }

  std::vector<Vertex> perm(size_budget);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return detail::relabel(size_budget, edges, perm);
}

}  // namespace indeque
