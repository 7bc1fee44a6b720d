#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "indeque/blocks.hpp"
#include "indeque/graph.hpp"
#include "indeque/verify.hpp"

namespace indeque {

// A path of one or two edges from v_i to w_j that meets the cycle only in
// its ends. Indices are 1-based, as in v_1..v_k and w_1..w_l.
struct CPath {
  int i = 0;
  int j = 0;
  std::optional<Vertex> internal;
  bool operator==(const CPath&) const = default;
};

// The cycle formed by an extremal C-path P and the arc Q of the cycle that
// runs from w_j to v_i around the outside of P.
struct EndCap {
  std::size_t cpath = 0;
  // Q as a vertex sequence w_j, ..., v_i.
  std::vector<Vertex> q_arc;
  // Q', the other arc of the cycle, as v_i, ..., w_j.
  std::vector<Vertex> q_prime;
  bool operator==(const EndCap&) const = default;
};

// A longest cycle v_1..v_k, w_l..w_1 (k, l >= 1, k + l >= 3) of a
// 2-connected block, plus its C-paths sorted by (i, j). No two C-paths
// cross: i1 < i2 implies j1 <= j2. Every block edge is a cycle edge or lies
// on a C-path.
struct BlockStructure {
  std::vector<Vertex> v;  // v[0] = v_1
  std::vector<Vertex> w;  // w[0] = w_1
  std::vector<CPath> cpaths;
  std::optional<EndCap> left_cap;
  std::optional<EndCap> right_cap;
  std::optional<Vertex> attachment;

  int k() const { return static_cast<int>(v.size()); }
  int l() const { return static_cast<int>(w.size()); }
  Vertex vi(int i) const { return v[i - 1]; }
  Vertex wj(int j) const { return w[j - 1]; }

  // v_1..v_k, w_l..w_1
  std::vector<Vertex> cycle() const {
    std::vector<Vertex> c = v;
    c.insert(c.end(), w.rbegin(), w.rend());
    return c;
  }

  bool operator==(const BlockStructure&) const = default;
};

struct StructureMismatch {
  std::string reason;
};

using StructureResult = std::variant<BlockStructure, StructureMismatch>;

class StructureMismatchError : public Error {
 public:
  StructureMismatchError(StructureMismatch m, VertexSet block)
      : Error("block structure mismatch: " + m.reason), mismatch_(std::move(m)), block_(std::move(block)) {}
  const StructureMismatch& mismatch() const { return mismatch_; }
  const VertexSet& block() const { return block_; }

 private:
  StructureMismatch mismatch_;
  VertexSet block_;
};

namespace detail {

// Longest cycles by backtracking. A cycle is grown from its least vertex s
// through larger vertices only; the open path s..x can still be closed only
// through the blocks on the x–s path of the block-cut tree of the unused
// vertices, which bounds the final length.
class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : g_(g), on_path_(g.order(), 0) {}

  int longest_length() {
    int best = 0;
    for (Vertex s = 0; s < g_.order() && g_.order() - s > best; ++s) {
      start(s);
      grow_longest(s, s, best);
      finish(s);
    }
    return best;
  }

  // Canonical cycles (least vertex first, second vertex below the last) of
  // exactly `len` vertices, lexicographically sorted; at most `cap`.
  std::vector<std::vector<Vertex>> cycles_of_length(int len, std::optional<Vertex> through, std::size_t cap,
                                                    bool& truncated) {
    std::vector<std::vector<Vertex>> out;
    truncated = false;
    const Vertex last_start = through ? *through : g_.order() - 1;
    for (Vertex s = 0; s <= last_start && g_.order() - s >= len && !truncated; ++s) {
      start(s);
      grow_exact(s, s, len, through, cap, out, truncated);
      finish(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Reach {
    bool connected = false;
    std::vector<char> region;  // vertices usable by the rest of the cycle
    int size = 0;
  };

  void start(Vertex s) {
    path_.assign(1, s);
    on_path_[s] = 1;
  }
  void finish(Vertex s) {
    on_path_[s] = 0;
    path_.clear();
  }

  Reach reach(Vertex s, Vertex x) const {
    VertexSet allowed;
    for (Vertex y = s; y < g_.order(); ++y)
      if (y == s || y == x || !on_path_[y]) allowed.push_back(y);
    auto sub = induced_subgraph(g_, allowed);
    const auto d = decompose(sub.graph);
    const auto forest = d.block_forest();
    const int nb = static_cast<int>(d.blocks.size());
    auto node_of = [&](Vertex v) {
      const Vertex lv = sub.to_new[v];
      if (d.is_cutvertex(lv)) {
        auto it = std::lower_bound(d.cutvertices.begin(), d.cutvertices.end(), lv);
        return nb + static_cast<int>(it - d.cutvertices.begin());
      }
      return d.blocks_of[lv].front();
    };
    const int from = node_of(x), to = node_of(s);
    std::vector<int> prev(forest.order(), -2);
    std::vector<int> queue{from};
    prev[from] = -1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex y : forest.neighbors(queue[h]))
        if (prev[y] == -2) {
          prev[y] = queue[h];
          queue.push_back(y);
        }
    Reach r;
    if (prev[to] == -2) return r;
    r.connected = true;
    r.region.assign(g_.order(), 0);
    for (int node = to; node != -1; node = prev[node]) {
      if (node >= nb) continue;
      for (Vertex lv : d.blocks[node]) {
        const Vertex v = sub.to_old[lv];
        if (!r.region[v]) {
          r.region[v] = 1;
          ++r.size;
        }
      }
    }
    return r;
  }

  void grow_longest(Vertex s, Vertex x, int& best) {
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && g_.adjacent(x, s)) best = std::max(best, len);
    if (len >= 2) {
      const Reach r = reach(s, x);
      if (!r.connected || len - 2 + r.size <= best) return;
    }
    for (Vertex y : g_.neighbors(x)) {
      if (y <= s || on_path_[y]) continue;
      push(y);
      grow_longest(s, y, best);
      pop();
    }
  }

  void grow_exact(Vertex s, Vertex x, int len, std::optional<Vertex> through, std::size_t cap,
                  std::vector<std::vector<Vertex>>& out, bool& truncated) {
    if (truncated) return;
    const int cur = static_cast<int>(path_.size());
    if (cur == len) {
      if (g_.adjacent(x, s) && path_[1] < path_.back() && (!through || on_path_[*through])) {
        if (out.size() == cap) {
          truncated = true;
          return;
        }
        out.push_back(path_);
      }
      return;
    }
    if (cur >= 2) {
      const Reach r = reach(s, x);
      if (!r.connected || cur - 2 + r.size < len) return;
      if (through && !on_path_[*through] && !r.region[*through]) return;
    }
    for (Vertex y : g_.neighbors(x)) {
      if (y <= s || on_path_[y]) continue;
      push(y);
      grow_exact(s, y, len, through, cap, out, truncated);
      pop();
    }
  }

  void push(Vertex y) {
    path_.push_back(y);
    on_path_[y] = 1;
  }
  void pop() {
    on_path_[path_.back()] = 0;
    path_.pop_back();
  }

  const Graph& g_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

inline constexpr std::size_t kLongestCycleCap = 4096;

// Tries to read `cyc` as v_1..v_k, w_l..w_1 for some split into two arcs.
inline std::optional<BlockStructure> label_cycle(const Graph& g, const std::vector<Vertex>& cyc) {
  const int len = static_cast<int>(cyc.size());
  std::vector<int> pos(g.order(), -1);
  for (int p = 0; p < len; ++p) pos[cyc[p]] = p;

  struct RawPath {
    int p, q;
    std::optional<Vertex> internal;
  };
  std::vector<RawPath> raw;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (pos[x] >= 0) {
      for (Vertex y : g.neighbors(x)) {
        if (pos[y] < 0 || y < x) continue;
        const int gap = (pos[y] - pos[x] + len) % len;
        if (gap != 1 && gap != len - 1) raw.push_back({pos[x], pos[y], std::nullopt});
      }
      continue;
    }
    const auto nb = g.neighbors(x);
    if (nb.size() != 2 || pos[nb[0]] < 0 || pos[nb[1]] < 0) return std::nullopt;
    raw.push_back({pos[nb[0]], pos[nb[1]], x});
  }

  // Cut the cycle after positions t1 < t2. The arc holding position 0 is the
  // v-side, read in cycle order: v_1 = cyc[t2+1], ..., v_k = cyc[t1]; then
  // w_l = cyc[t1+1], ..., w_1 = cyc[t2].
  for (int t1 = 0; t1 < len; ++t1) {
    for (int t2 = t1 + 1; t2 < len; ++t2) {
      const int k = len - (t2 - t1);
      auto v_index = [&](int p) { return p > t2 ? p - t2 : (p <= t1 ? p + (len - t2) : 0); };
      auto w_index = [&](int p) { return (p > t1 && p <= t2) ? t2 - p + 1 : 0; };
      std::vector<CPath> paths;
      bool ok = true;
      for (const auto& r : raw) {
        int i = v_index(r.p), j = w_index(r.q);
        if (!i || !j) {
          i = v_index(r.q);
          j = w_index(r.p);
        }
        if (!i || !j) {
          ok = false;
          break;
        }
        paths.push_back({i, j, r.internal});
      }
      if (!ok) continue;
      std::sort(paths.begin(), paths.end(), [](const CPath& a, const CPath& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        if (a.internal.has_value() != b.internal.has_value()) return a.internal.has_value();
        return a.internal < b.internal;
      });
      for (std::size_t x = 1; ok && x < paths.size(); ++x)
        if (paths[x].j < paths[x - 1].j) ok = false;
      if (!ok) continue;

      BlockStructure st;
      for (int i = 1; i <= k; ++i) st.v.push_back(cyc[(t2 + i) % len]);
      for (int j = 1; j <= len - k; ++j) st.w.push_back(cyc[t2 - j + 1]);
      st.cpaths = std::move(paths);
      return st;
    }
  }
  return std::nullopt;
}

inline EndCap make_cap(const BlockStructure& st, std::size_t idx, bool left) {
  const auto& p = st.cpaths[idx];
  EndCap cap;
  cap.cpath = idx;
  if (left) {
    for (int j = p.j; j >= 1; --j) cap.q_arc.push_back(st.wj(j));
    for (int i = 1; i <= p.i; ++i) cap.q_arc.push_back(st.vi(i));
    for (int i = p.i; i <= st.k(); ++i) cap.q_prime.push_back(st.vi(i));
    for (int j = st.l(); j >= p.j; --j) cap.q_prime.push_back(st.wj(j));
  } else {
    for (int j = p.j; j <= st.l(); ++j) cap.q_arc.push_back(st.wj(j));
    for (int i = st.k(); i >= p.i; --i) cap.q_arc.push_back(st.vi(i));
    for (int i = p.i; i >= 1; --i) cap.q_prime.push_back(st.vi(i));
    for (int j = 1; j <= p.j; ++j) cap.q_prime.push_back(st.wj(j));
  }
  return cap;
}

inline void attach_caps(BlockStructure& st) {
  if (st.cpaths.empty()) return;
  // Extremal (i, j); among parallel paths the one with an internal vertex.
  st.left_cap = make_cap(st, 0, true);
  std::size_t r = st.cpaths.size() - 1;
  while (r > 0 && st.cpaths[r - 1].i == st.cpaths[r].i && st.cpaths[r - 1].j == st.cpaths[r].j) --r;
  st.right_cap = make_cap(st, r, false);
}

}  // namespace detail

// Finds a longest cycle of a 2-connected block, through `attachment` when
// given, whose remaining edges form non-crossing C-paths of length <= 2
// between its two sides. Longest cycles are tried in lexicographic order and
// cut points in lexicographic order; the first fit wins.
inline StructureResult extract_structure(const Graph& block, std::optional<Vertex> attachment = std::nullopt) {
  const int n = block.order();
  if (n < 3) throw GraphError("block is not 2-connected: fewer than 3 vertices");
  const auto d = decompose(block);
  if (d.blocks.size() != 1) throw GraphError("block is not 2-connected");
  if (attachment && !block.contains(*attachment)) throw GraphError("attachment vertex out of range");

  if (block.edge_count() > static_cast<std::size_t>(2 * n - 3))
    return StructureMismatch{"more than 2n-3 edges"};

  detail::CycleSearch search(block);
  const int len = search.longest_length();
  bool truncated = false;
  const auto cycles = search.cycles_of_length(len, attachment, detail::kLongestCycleCap, truncated);
  if (cycles.empty()) return StructureMismatch{"attachment vertex lies on no longest cycle"};
  for (const auto& cyc : cycles) {
    if (auto st = detail::label_cycle(block, cyc)) {
      detail::attach_caps(*st);
      st->attachment = attachment;
      return *st;
    }
  }
  if (truncated) return StructureMismatch{"too many longest cycles to examine"};
  return StructureMismatch{"no longest cycle admits non-crossing C-paths of length at most 2"};
}

enum class Pw2Case {
  isolated_vertex = 1,
  leaf = 2,
  single_cycle = 3,
  long_cap_arc = 4,
  two_internal = 5,
  single_internal = 6,
  diamond = 7,
};

struct Pw2Step {
  Pw2Case kind;
  VertexSet removed;
  VertexSet added;
};

struct Pw2Result {
  VertexSet set;
  std::vector<Pw2Step> trace;
  // case_counts[c - 1] counts steps of case c.
  std::array<std::size_t, 7> case_counts{};
};

// ceil(n/2).
inline int pw2_guarantee(int n) { return (n + 1) / 2; }

namespace detail {

class Pw2Solver {
 public:
  explicit Pw2Solver(const Graph& g) : g_(g), alive_(g.order(), 1) {}

  Pw2Result run() {
    int remaining = g_.order();
    while (remaining > 0) {
      Pw2Step step = next_step();
      check(step);
      for (Vertex x : step.removed) alive_[x] = 0;
      remaining -= static_cast<int>(step.removed.size());
      out_.set.insert(out_.set.end(), step.added.begin(), step.added.end());
      ++out_.case_counts[static_cast<int>(step.kind) - 1];
      out_.trace.push_back(std::move(step));
    }
    std::sort(out_.set.begin(), out_.set.end());
    return std::move(out_);
  }

 private:
  int alive_degree(Vertex v) const {
    int d = 0;
    for (Vertex u : g_.neighbors(v)) d += alive_[u];
    return d;
  }

  static Pw2Step make(Pw2Case kind, VertexSet removed, VertexSet added) {
    std::sort(removed.begin(), removed.end());
    std::sort(added.begin(), added.end());
    return {kind, std::move(removed), std::move(added)};
  }

  Pw2Step next_step() {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[v] && alive_degree(v) == 0) return make(Pw2Case::isolated_vertex, {v}, {v});
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!alive_[v] || alive_degree(v) != 1) continue;
      for (Vertex w : g_.neighbors(v))
        if (alive_[w]) return make(Pw2Case::leaf, {v, w}, {v});
    }
    return block_step();
  }

  // Minimum degree >= 2: every leaf block of the block forest is 2-connected.
  Pw2Step block_step() {
    VertexSet live;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[v]) live.push_back(v);
    const auto cur = induced_subgraph(g_, live);
    const auto d = decompose(cur.graph);
    const auto leaves = leaf_blocks(d);
    if (leaves.empty()) throw std::logic_error("block forest without a leaf");
    const auto& leaf = leaves.front();
    const auto local = induced_subgraph(cur.graph, d.blocks[leaf.block]);
    VertexSet host;  // block vertex (block-local id) -> host id
    for (Vertex lv : local.to_old) host.push_back(cur.to_old[lv]);

    std::optional<Vertex> b_local;
    if (leaf.attachment) b_local = local.to_new[*leaf.attachment];
    auto res = extract_structure(local.graph, b_local);
    if (auto* m = std::get_if<StructureMismatch>(&res)) throw StructureMismatchError(*m, host);
    const auto& st = std::get<BlockStructure>(res);

    const Graph& bg = local.graph;
    auto H = [&](Vertex lv) { return host[lv]; };
    VertexSet whole;
    for (Vertex lv = 0; lv < bg.order(); ++lv) whole.push_back(H(lv));

    if (st.cpaths.empty()) {
      // Pattern x_1 x_2 . x_4 x_5 . ... around the cycle, starting after b
      // (or after the last cycle vertex when the block is a component).
      auto cyc = st.cycle();
      const Vertex first = b_local ? *b_local : *std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), first), cyc.end());
      VertexSet added;
      if (b_local) {
        for (std::size_t t = 1; t < cyc.size(); ++t)
          if (t % 3 != 0) added.push_back(H(cyc[t]));
      } else {
        for (std::size_t p = 0; p + 1 < cyc.size(); ++p)
          if (p % 3 != 2) added.push_back(H(cyc[p]));
      }
      return make(Pw2Case::single_cycle, whole, added);
    }

    int blocked = 0;
    std::optional<Vertex> diamond_u, diamond_other;
    for (const auto* cap : {&*st.left_cap, &*st.right_cap}) {
      const auto& p = st.cpaths[cap->cpath];
      const Vertex vi = st.vi(p.i), wj = st.wj(p.j);
      const std::vector<Vertex> inner(cap->q_arc.begin() + 1, cap->q_arc.end() - 1);
      if (b_local && std::find(inner.begin(), inner.end(), *b_local) != inner.end()) continue;
      const std::size_t m = inner.size();
      if (m >= 2) {
        const Vertex u3 = m == 2 ? vi : inner[2];
        return make(Pw2Case::long_cap_arc, {H(wj), H(inner[0]), H(inner[1]), H(u3)}, {H(inner[0]), H(inner[1])});
      }
      if (m == 0) throw std::logic_error("end-cap arc without internal vertex on a longest cycle");
      const Vertex u = inner[0];
      if (p.internal)
        return make(Pw2Case::two_internal, {H(vi), H(wj), H(*p.internal), H(u)}, {H(u), H(*p.internal)});

      // P is a chord and Q has the single internal vertex u. One endpoint of
      // P has degree 3 in the block; v_i is preferred.
      Vertex x = -1;
      if (bg.degree(vi) == 3)
        x = vi;
      else if (bg.degree(wj) == 3)
        x = wj;
      else
        throw std::logic_error("both end-cap chord endpoints have block degree above 3");
      if (b_local && x == *b_local) {
        ++blocked;
        if (!diamond_u) {
          diamond_u = u;
          diamond_other = x == vi ? wj : vi;
        }
        continue;
      }
      const Vertex z = x == vi ? cap->q_prime[1] : cap->q_prime[cap->q_prime.size() - 2];
      return make(Pw2Case::single_internal, {H(vi), H(wj), H(u), H(z)}, {H(x), H(u)});
    }
    if (blocked == 2 && bg.order() == 4)
      return make(Pw2Case::diamond, whole, {H(*diamond_u), H(*diamond_other)});
    throw std::logic_error("no end-cap case applies to the leaf block");
  }

  // Added vertices are removed ones, induce a cluster graph, and have no
  // neighbour that survives the step.
  void check(const Pw2Step& step) const {
    auto fail = [&](const char* why) {
      throw std::logic_error(std::string("pathwidth-2 step (case ") + std::to_string(static_cast<int>(step.kind)) +
                             ") " + why);
    };
    for (Vertex x : step.removed)
      if (!alive_[x]) fail("removes a dead vertex");
    for (Vertex a : step.added) {
      if (!std::binary_search(step.removed.begin(), step.removed.end(), a)) fail("adds an unremoved vertex");
      for (Vertex y : g_.neighbors(a))
        if (alive_[y] && !std::binary_search(step.removed.begin(), step.removed.end(), y))
          fail("adds a vertex with a surviving neighbour");
    }
    if (!is_indeque(g_, step.added)) fail("adds a non-cluster set");
    if (2 * step.added.size() < step.removed.size()) fail("adds fewer than half of what it removes");
  }

  const Graph& g_;
  std::vector<char> alive_;
  Pw2Result out_;
};

}  // namespace detail

// Indeque set of size >= ceil(n/2) for graphs whose 2-connected blocks have
// the pathwidth-2 block structure. Works by peeling: isolated vertices,
// leaves, then a leaf block of the block forest, each step removing r
// vertices and keeping at least r/2 of them. Throws StructureMismatchError
// when a block reached by the peeling lacks the structure.
inline Pw2Result indeque_pw2(const Graph& g) { return detail::Pw2Solver(g).run(); }

}  // namespace indeque
