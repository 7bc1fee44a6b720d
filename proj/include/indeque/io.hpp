#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline bool starts_with(std::string_view s, std::string_view p) {
  return s.substr(0, p.size()) == p;
}

}  // namespace detail

// graph6: vertex count N(n) in one byte (n < 63), '~' + 3 bytes
// (n < 258048) or '~~' + 6 bytes; then the upper triangle of the adjacency
// matrix in column order (0,1),(0,2),(1,2),(0,3),... packed big-endian into
// 6-bit groups, zero padded, each group offset by 63.
inline std::string serialize_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  auto put6 = [&](std::uint64_t x) { out.push_back(static_cast<char>(63 + (x & 63))); };
  if (n < 63) {
    put6(n);
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) put6(n >> shift);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) put6(n >> shift);
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        put6(static_cast<std::uint64_t>(acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits) put6(static_cast<std::uint64_t>(acc << (6 - nbits)));
  return out;
}

inline Graph parse_graph6(std::string_view line, std::size_t lineno = 1) {
  std::string_view s = detail::trim(line);
  if (detail::starts_with(s, ">>graph6<<")) s.remove_prefix(10);
  if (detail::starts_with(s, ">>sparse6<<") || detail::starts_with(s, ":"))
    throw UnsupportedFormat("sparse6 input is not supported");
  if (detail::starts_with(s, ">>digraph6<<") || detail::starts_with(s, "&"))
    throw UnsupportedFormat("digraph6 input is not supported");
  if (s.empty()) throw ParseError(lineno, "empty graph6 line");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(lineno, "illegal graph6 character");

  auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(s[i] - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else if (s.size() >= 2 && val(1) == 63) {
    if (s.size() < 8) throw ParseError(lineno, "malformed graph6 length prefix");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    pos = 8;
  } else {
    if (s.size() < 4) throw ParseError(lineno, "malformed graph6 length prefix");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
    pos = 4;
  }

  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw ParseError(lineno, "graph6 vertex count too large");
  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes)
    throw ParseError(lineno, "graph6 body has " + std::to_string(s.size() - pos) +
                                 " bytes, expected " + std::to_string(nbytes));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      if ((val(pos + k / 6) >> (5 - k % 6)) & 1)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (nbits % 6 != 0) {
    const std::uint64_t pad = 6 - nbits % 6;
    if (val(s.size() - 1) & ((std::uint64_t{1} << pad) - 1))
      throw ParseError(lineno, "non-zero graph6 padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

// Edge-list text: "n m" then m lines "u v"; '#' starts a comment.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    std::istringstream fields{std::string(line)};
    long long a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError(lineno, "expected two integers");
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError(lineno, "negative header value");
      if (a > std::numeric_limits<int>::max()) throw ParseError(lineno, "vertex count too large");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(lineno, "more edges than the declared " + std::to_string(m));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(lineno, "vertex id out of range");
    if (a == b) throw ParseError(lineno, "self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw ParseError(lineno, "no graph");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// A single graph from text in either format. The first meaningful line
// decides: two whitespace-separated fields mean edge list, otherwise graph6.
inline Graph read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.find_first_of(" \t") != std::string_view::npos) return parse_edge_list(text);
    return parse_graph6(line, lineno);
  }
  throw Error("no graph");
}

}  // namespace indeque
