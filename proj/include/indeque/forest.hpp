#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

// Rotates a cycle to start at its least vertex, heading towards the smaller
// of that vertex's two cycle neighbours.
inline std::vector<Vertex> normalize_cycle(std::vector<Vertex> cyc) {
  if (cyc.size() < 3) return cyc;
  auto least = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), least, cyc.end());
  if (cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

// Some cycle of g (normalised), or nullopt when g is a forest.
inline std::optional<std::vector<Vertex>> find_cycle(const Graph& g) {
  std::vector<Vertex> parent(g.order(), -2);
  std::vector<int> depth(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (u == parent[v]) continue;
        if (parent[u] == -2) {
          parent[u] = v;
          depth[u] = depth[v] + 1;
          stack.push_back(u);
          continue;
        }
        // Non-tree edge vu closes the cycle through their common ancestor.
        std::vector<Vertex> left, right;
        Vertex a = v, b = u;
        while (depth[a] > depth[b]) left.push_back(a), a = parent[a];
        while (depth[b] > depth[a]) right.push_back(b), b = parent[b];
        while (a != b) {
          left.push_back(a), a = parent[a];
          right.push_back(b), b = parent[b];
        }
        left.push_back(a);
        left.insert(left.end(), right.rbegin(), right.rend());
        return normalize_cycle(std::move(left));
      }
    }
  }
  return std::nullopt;
}

struct ForestStep {
  VertexSet removed;
  VertexSet added;
};

struct ForestResult {
  VertexSet set;
  std::vector<ForestStep> trace;
};

// Indeque set of size >= ceil(2n/3) in a forest. Components of at most three
// vertices are taken directly (1, 2 and 2 vertices). Larger trees lose three
// vertices around an endpoint v of a longest path and gain two:
//   deg(u) = 2: remove v, u and u's other neighbour w; keep the edge uv.
//   deg(u) > 2: remove v, u and a leaf w of u; keep v and w.
// Throws CyclicInput when f has a cycle.
inline ForestResult indeque_forest(const Graph& f) {
  if (auto cyc = find_cycle(f)) throw CyclicInput(std::move(*cyc));

  const int n = f.order();
  std::vector<char> alive(n, 1);
  auto alive_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex u : f.neighbors(v)) d += alive[u];
    return d;
  };
  // Component of s among alive vertices, sorted; also fills dist from s.
  std::vector<int> dist(n, -1);
  auto sweep = [&](Vertex s) {
    VertexSet reached;
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      reached.push_back(v);
      for (Vertex u : f.neighbors(v))
        if (alive[u] && dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    std::sort(reached.begin(), reached.end());
    return reached;
  };
  auto farthest = [&](Vertex s) {
    VertexSet comp = sweep(s);
    Vertex best = s;
    for (Vertex v : comp)
      if (dist[v] > dist[best]) best = v;  // comp ascending: ties keep least id
    for (Vertex v : comp) dist[v] = -1;
    return std::make_pair(best, comp);
  };

  ForestResult out;
  std::deque<VertexSet> work;
  {
    std::vector<char> done(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (done[s]) continue;
      auto [_, comp] = farthest(s);
      for (Vertex v : comp) done[v] = 1;
      work.push_back(std::move(comp));
    }
  }

  while (!work.empty()) {
    VertexSet comp = std::move(work.front());
    work.pop_front();
    ForestStep step;
    if (comp.size() <= 3) {
      step.removed = comp;
      if (comp.size() == 3) {
        for (Vertex v : comp)
          if (alive_degree(v) == 1) step.added.push_back(v);
      } else {
        step.added = comp;
      }
    } else {
      const Vertex y = farthest(comp.front()).first;
      const Vertex v = farthest(y).first;
      Vertex u = -1;
      for (Vertex x : f.neighbors(v))
        if (alive[x]) u = x;
      Vertex w = -1;
      if (alive_degree(u) == 2) {
        for (Vertex x : f.neighbors(u))
          if (alive[x] && x != v) w = x;
        step.added = {std::min(u, v), std::max(u, v)};
      } else {
        for (Vertex x : f.neighbors(u))
          if (alive[x] && x != v && alive_degree(x) == 1) {
            w = x;
            break;
          }
        if (w < 0) throw std::logic_error("longest-path endpoint has a non-leaf sibling");
        step.added = {std::min(v, w), std::max(v, w)};
      }
      step.removed = {u, v, w};
      std::sort(step.removed.begin(), step.removed.end());
    }
    for (Vertex x : step.removed) alive[x] = 0;
    out.set.insert(out.set.end(), step.added.begin(), step.added.end());

    // Whatever is left of this tree splits into subtrees; handle them next.
    std::vector<VertexSet> rest;
    for (Vertex x : comp) {
      if (!alive[x] || dist[x] == -2) continue;
      auto [_, sub] = farthest(x);
      for (Vertex y : sub) dist[y] = -2;
      rest.push_back(std::move(sub));
    }
    for (Vertex x : comp) dist[x] = -1;
    work.insert(work.begin(), rest.begin(), rest.end());
    out.trace.push_back(std::move(step));
  }
  std::sort(out.set.begin(), out.set.end());
  return out;
}

// ceil(2n/3).
inline int forest_guarantee(int n) { return (2 * n + 2) / 3; }

}  // namespace indeque
