#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "indeque/forest.hpp"
#include "indeque/graph.hpp"
#include "indeque/io.hpp"

namespace indeque {

class InvalidColoring : public Error {
 public:
  using Error::Error;
};

// Partition of V(G) into colour classes 0..c-1.
struct AcyclicColoring {
  std::vector<VertexSet> classes;

  int class_count() const { return static_cast<int>(classes.size()); }

  // colour[v] per vertex; -1 for vertices in no class.
  std::vector<int> colors(int n) const {
    std::vector<int> c(n, -1);
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (Vertex v : classes[k])
        if (v >= 0 && v < n) c[v] = static_cast<int>(k);
    return c;
  }

  // Classes from a per-vertex colour vector; colours are renumbered densely
  // in increasing order.
  static AcyclicColoring from_colors(const std::vector<int>& color) {
    std::map<int, int> dense;
    for (int c : color) dense.emplace(c, 0);
    int next = 0;
    for (auto& [_, id] : dense) id = next++;
    AcyclicColoring col;
    col.classes.assign(dense.size(), {});
    for (Vertex v = 0; v < static_cast<Vertex>(color.size()); ++v) col.classes[dense[color[v]]].push_back(v);
    return col;
  }
};

struct MonochromaticEdge {
  Vertex u, v;
};

struct BicoloredCycle {
  std::vector<Vertex> cycle;
};

using ColoringViolation = std::variant<MonochromaticEdge, BicoloredCycle>;

// Throws InvalidColoring unless the classes partition V(g).
inline void check_partition(const Graph& g, const AcyclicColoring& col) {
  std::vector<char> seen(g.order(), 0);
  for (const auto& cls : col.classes)
    for (Vertex v : cls) {
      if (!g.contains(v)) throw InvalidColoring("colour class holds unknown vertex " + std::to_string(v));
      if (seen[v]) throw InvalidColoring("vertex " + std::to_string(v) + " coloured twice");
      seen[v] = 1;
    }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v]) throw InvalidColoring("vertex " + std::to_string(v) + " is not coloured");
}

// nullopt when the colouring is proper and every two classes induce a
// forest; otherwise the first monochromatic edge, or a cycle in the first
// class pair (lexicographic) that has one.
inline std::optional<ColoringViolation> verify_acyclic_coloring(const Graph& g, const AcyclicColoring& col) {
  check_partition(g, col);
  const auto color = col.colors(g.order());
  for (auto [u, v] : g.edges())
    if (color[u] == color[v]) return MonochromaticEdge{u, v};
  for (std::size_t a = 0; a < col.classes.size(); ++a)
    for (std::size_t b = a + 1; b < col.classes.size(); ++b) {
      VertexSet both = col.classes[a];
      both.insert(both.end(), col.classes[b].begin(), col.classes[b].end());
      auto sub = induced_subgraph(g, both);
      if (auto cyc = find_cycle(sub.graph)) {
        for (auto& v : *cyc) v = sub.to_old[v];
        return BicoloredCycle{normalize_cycle(std::move(*cyc))};
      }
    }
  return std::nullopt;
}

// Greedy acyclic colouring. Vertices are taken in `order` (default: degree
// descending, then id) and get the least colour c such that no neighbour has
// colour c and, for every other colour d, no two d-coloured neighbours are
// already joined by a path in the (c,d)-coloured subgraph.
inline AcyclicColoring greedy_acyclic_coloring(const Graph& g, std::optional<std::vector<Vertex>> order = std::nullopt) {
  const int n = g.order();
  std::vector<Vertex> seq;
  if (order) {
    seq = *order;
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    if (sorted != ids) throw GraphError("colouring order is not a permutation of the vertices");
  } else {
    seq.resize(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  std::vector<int> color(n, -1);
  // Is there a path from s to t using only vertices coloured c or d?
  auto joined = [&](Vertex s, Vertex t, int c, int d) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      if (x == t) return true;
      for (Vertex y : g.neighbors(x))
        if (!seen[y] && (color[y] == c || color[y] == d)) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    return false;
  };

  for (Vertex v : seq) {
    for (int c = 0;; ++c) {
      bool ok = true;
      std::map<int, std::vector<Vertex>> by_color;
      for (Vertex u : g.neighbors(v)) {
        if (color[u] == c) ok = false;
        if (color[u] >= 0) by_color[color[u]].push_back(u);
      }
      for (auto it = by_color.begin(); ok && it != by_color.end(); ++it) {
        const auto& nb = it->second;
        for (std::size_t x = 0; ok && x < nb.size(); ++x)
          for (std::size_t y = x + 1; ok && y < nb.size(); ++y)
            if (joined(nb[x], nb[y], c, it->first)) ok = false;
      }
      if (ok) {
        color[v] = c;
        break;
      }
    }
  }
  auto col = AcyclicColoring::from_colors(color);
  if (verify_acyclic_coloring(g, col)) throw std::logic_error("greedy colouring failed verification");
  return col;
}

struct ColoringPipelineResult {
  VertexSet set;
  // Union of the two largest classes; induces a forest.
  VertexSet forest;
  int class_count = 0;
  // ceil((2/3) * ceil(2n/c)) with c >= 2.
  int guarantee = 0;
};

// ceil((2/3) ceil(2n/c)); a single class is treated as two.
inline int coloring_guarantee(int n, int classes) {
  const int c = std::max(classes, 2);
  const int f = (2 * n + c - 1) / c;
  return forest_guarantee(f);
}

// Union of the two largest classes (ties: lower index), which induces a
// forest, then the forest algorithm on it.
inline ColoringPipelineResult indeque_via_coloring(const Graph& g, const AcyclicColoring& col) {
  if (auto bad = verify_acyclic_coloring(g, col)) throw InvalidColoring("colouring is not acyclic");
  std::vector<int> idx(col.classes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return col.classes[a].size() > col.classes[b].size(); });
  ColoringPipelineResult out;
  for (std::size_t k = 0; k < idx.size() && k < 2; ++k)
    out.forest.insert(out.forest.end(), col.classes[idx[k]].begin(), col.classes[idx[k]].end());
  std::sort(out.forest.begin(), out.forest.end());
  auto sub = induced_subgraph(g, out.forest);
  for (Vertex v : indeque_forest(sub.graph).set) out.set.push_back(sub.to_old[v]);
  out.class_count = col.class_count();
  out.guarantee = coloring_guarantee(g.order(), out.class_count);
  return out;
}

// "vertexId colorId" per line; '#' comments allowed.
inline AcyclicColoring parse_coloring(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::vector<int> color(n, -1);
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    std::istringstream fields{std::string(line)};
    long long v = 0, c = 0;
    std::string extra;
    if (!(fields >> v >> c) || (fields >> extra)) throw ParseError(lineno, "expected \"vertexId colorId\"");
    if (v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (c < 0 || c > std::numeric_limits<int>::max()) throw ParseError(lineno, "colour id out of range");
    if (color[v] != -1) throw InvalidColoring("vertex " + std::to_string(v) + " coloured twice");
    color[v] = static_cast<int>(c);
  }
  for (Vertex v = 0; v < n; ++v)
    if (color[v] < 0) throw InvalidColoring("vertex " + std::to_string(v) + " is not coloured");
  return AcyclicColoring::from_colors(color);
}

inline std::string serialize_coloring(const AcyclicColoring& col, int n) {
  std::string out;
  const auto c = col.colors(n);
  for (Vertex v = 0; v < n; ++v) out += std::to_string(v) + " " + std::to_string(c[v]) + "\n";
  return out;
}

}  // namespace indeque
