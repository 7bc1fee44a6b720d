#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

struct BlockDecomposition {
  // Maximal 2-connected subgraphs, bridges and isolated vertices as sorted
  // vertex lists, ordered by least vertex (then lexicographically).
  std::vector<VertexSet> blocks;
  VertexSet cutvertices;
  // block_cuts[b]: the cut vertices lying in block b.
  std::vector<VertexSet> block_cuts;
  // blocks_of[v]: indices of the blocks containing v.
  std::vector<std::vector<int>> blocks_of;

  bool is_cutvertex(Vertex v) const { return blocks_of[v].size() > 1; }

  // Block graph: nodes 0..B-1 are blocks, B.. are cut vertices in the
  // order of `cutvertices`.
  Graph block_forest() const {
    std::vector<Edge> e;
    const int nb = static_cast<int>(blocks.size());
    for (std::size_t a = 0; a < cutvertices.size(); ++a)
      for (int b : blocks_of[cutvertices[a]]) e.emplace_back(b, nb + static_cast<int>(a));
    return Graph::from_edge_list(nb + static_cast<int>(cutvertices.size()), e);
  }
};

// Hopcroft–Tarjan lowpoint search, iterative.
inline BlockDecomposition decompose(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> raw;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int clock = 0;

  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = clock++;
    if (g.degree(s) == 0) {
      raw.push_back({s});
      continue;
    }
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex u = nb[f.next++];
        if (disc[u] == -1) {
          edge_stack.emplace_back(f.v, u);
          disc[u] = low[u] = clock++;
          stack.push_back({u, f.v, 0});
        } else if (u != f.parent && disc[u] < disc[f.v]) {
          edge_stack.emplace_back(f.v, u);
          low[f.v] = std::min(low[f.v], disc[u]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex p = f.parent;
      stack.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        VertexSet block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{p, v}) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        raw.push_back(std::move(block));
      }
    }
  }

  std::sort(raw.begin(), raw.end());
  BlockDecomposition d;
  d.blocks = std::move(raw);
  d.blocks_of.assign(n, {});
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    for (Vertex v : d.blocks[b]) d.blocks_of[v].push_back(static_cast<int>(b));
  d.block_cuts.assign(d.blocks.size(), {});
  for (Vertex v = 0; v < n; ++v) {
    if (d.blocks_of[v].size() < 2) continue;
    d.cutvertices.push_back(v);
    for (int b : d.blocks_of[v]) d.block_cuts[b].push_back(v);
  }
  return d;
}

struct LeafBlock {
  int block;
  // The single cut vertex of the block; absent when the block is a whole
  // component.
  std::optional<Vertex> attachment;
};

// Blocks of degree at most one in the block forest, in block order.
inline std::vector<LeafBlock> leaf_blocks(const BlockDecomposition& d) {
  std::vector<LeafBlock> out;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& cuts = d.block_cuts[b];
    if (cuts.size() > 1) continue;
    LeafBlock lb{static_cast<int>(b), std::nullopt};
    if (!cuts.empty()) lb.attachment = cuts.front();
    out.push_back(lb);
  }
  return out;
}

// Indented dump of the block forest, one tree per component.
inline std::string explain_blocks(const BlockDecomposition& d) {
  auto set_str = [](const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  std::string out;
  std::vector<char> seen_block(d.blocks.size(), 0);
  std::vector<char> seen_cut(d.blocks_of.size(), 0);
  struct Item {
    bool is_block;
    int id;
    int depth;
  };
  for (std::size_t root = 0; root < d.blocks.size(); ++root) {
    if (seen_block[root]) continue;
    std::vector<Item> stack{{true, static_cast<int>(root), 0}};
    seen_block[root] = 1;
    while (!stack.empty()) {
      const Item it = stack.back();
      stack.pop_back();
      out += std::string(2 * it.depth, ' ');
      std::vector<Item> children;
      if (it.is_block) {
        out += "block " + std::to_string(it.id) + " " + set_str(d.blocks[it.id]) + "\n";
        for (Vertex c : d.block_cuts[it.id])
          if (!seen_cut[c]) {
            seen_cut[c] = 1;
            children.push_back({false, c, it.depth + 1});
          }
      } else {
        out += "cut " + std::to_string(it.id) + "\n";
        for (int b : d.blocks_of[it.id])
          if (!seen_block[b]) {
            seen_block[b] = 1;
            children.push_back({true, b, it.depth + 1});
          }
      }
      stack.insert(stack.end(), children.rbegin(), children.rend());
    }
  }
  return out;
}

}  // namespace indeque
