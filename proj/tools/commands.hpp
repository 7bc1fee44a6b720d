#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indeque/indeque.hpp"
#include "indeque/to_json.hpp"

namespace indeque::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int oracle_limit_from_env() {
  const char* raw = std::getenv("INDEQUE_ORACLE_LIMIT");
  if (!raw || !*raw) return kDefaultOracleLimit;
  int value = 0;
  const std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0)
    throw UsageError("INDEQUE_ORACLE_LIMIT must be a non-negative integer");
  return value;
}

inline std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

// Whitespace-separated vertex ids; '#' starts a comment.
inline VertexSet parse_vertex_set(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  VertexSet s;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string tok;
    while (fields >> tok) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(lineno, "bad vertex id \"" + tok + "\"");
      if (v < 0 || v >= n) throw ParseError(lineno, "vertex id " + tok + " out of range");
      s.push_back(static_cast<Vertex>(v));
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("vertex set lists a vertex twice");
  return s;
}

// The CLI never prints a set it has not re-checked.
inline ClusterCertificate checked_certificate(const Graph& g, const VertexSet& s) {
  auto cert = certify(g, s);
  if (!certificate_valid(g, cert)) throw std::logic_error("certificate failed re-validation");
  return cert;
}

struct SolveOptions {
  std::string input = "-";
  std::string method = "branch";
  bool enumerate_max = false;
  std::size_t cap = 10000;
  int limit = -1;
};

inline json cmd_solve(const SolveOptions& o, std::istream& in) {
  const Graph g = read_graph(read_source(o.input, in));
  const int limit = o.limit >= 0 ? o.limit : oracle_limit_from_env();
  SolveResult r = o.method == "brute" ? brute_force(g, limit) : solve(g);
  if (!certificate_valid(g, r.certificate) || static_cast<int>(r.certificate.size()) != r.value)
    throw std::logic_error("solver certificate failed re-validation");
  json out = r;
  if (o.enumerate_max) {
    const auto all = enumerate_maximum_sets(g, o.cap, limit);
    if (all.value != r.value) throw std::logic_error("enumeration disagrees with the solver");
    for (const auto& c : all.sets)
      if (!certificate_valid(g, c)) throw std::logic_error("enumerated certificate failed re-validation");
    out["maximum_sets"] = all.total;
    out["cap_exhausted"] = all.cap_exhausted();
    out["partitions"] = achievable_partitions(all.sets);
  }
  return out;
}

struct ApproxOptions {
  std::string input = "-";
  std::string method = "forest";
  std::string coloring;
  bool trace = false;
  bool explain = false;
};

inline json cmd_approx(const ApproxOptions& o, std::istream& in, std::ostream& err) {
  const Graph g = read_graph(read_source(o.input, in));
  if (o.explain) err << explain_blocks(decompose(g));
  json out;
  VertexSet set;
  int guarantee = 0;
  if (o.method == "forest") {
    auto r = indeque_forest(g);
    set = r.set;
    guarantee = forest_guarantee(g.order());
    if (o.trace) {
      out["trace"] = json::array();
      for (const auto& s : r.trace) out["trace"].push_back({{"removed", s.removed}, {"added", s.added}});
    }
  } else if (o.method == "pw2") {
    auto r = indeque_pw2(g);
    set = r.set;
    guarantee = pw2_guarantee(g.order());
    out["case_counts"] = r.case_counts;
    if (o.trace) {
      out["trace"] = json::array();
      for (const auto& s : r.trace)
        out["trace"].push_back({{"case", static_cast<int>(s.kind)}, {"removed", s.removed}, {"added", s.added}});
    }
  } else {
    const AcyclicColoring col = o.coloring.empty() ? greedy_acyclic_coloring(g)
                                                   : parse_coloring(read_source(o.coloring, in), g.order());
    if (auto bad = verify_acyclic_coloring(g, col)) {
      if (auto* e = std::get_if<MonochromaticEdge>(&*bad))
        throw InvalidColoring("edge " + std::to_string(e->u) + "-" + std::to_string(e->v) + " is monochromatic");
      throw InvalidColoring("two colour classes induce a cycle");
    }
    auto r = indeque_via_coloring(g, col);
    set = r.set;
    guarantee = r.guarantee;
    out["classes"] = r.class_count;
    out["forest_size"] = r.forest.size();
  }
  const auto cert = checked_certificate(g, set);
  if (static_cast<int>(set.size()) < guarantee) throw std::logic_error("result is below its guarantee");
  out["size"] = set.size();
  out["set"] = set;
  out["certificate"] = cert;
  out["guarantee"] = guarantee;
  return out;
}

struct ScanOptions {
  std::string input = "-";
  unsigned jobs = 0;
  bool abort_on_error = false;
};

struct ScanItem {
  std::size_t line = 0;
  std::string text;
  int n = 0;
  int value = 0;
  std::string error;
  bool internal = false;
};

// value/n for every graph6 line; workers take items in any order, the
// reduction walks them in stream order so ties go to the earliest line.
inline json cmd_scan(const ScanOptions& o, std::istream& in, std::ostream& err) {
  std::vector<ScanItem> items;
  {
    std::istringstream lines(read_source(o.input, in));
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(lines, raw)) {
      ++lineno;
      auto t = detail::trim(raw);
      if (!t.empty()) items.push_back({lineno, std::string(t)});
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      auto& it = items[k];
      auto at = [&](const std::string& what) { return "line " + std::to_string(it.line) + ": " + what; };
      try {
        const Graph g = parse_graph6(it.text, it.line);
        it.n = g.order();
        if (it.n == 0) {
          it.error = at("empty graph has no ratio");
          continue;
        }
        const auto r = solve(g);
        if (!certificate_valid(g, r.certificate)) throw std::logic_error("certificate failed re-validation");
        it.value = r.value;
      } catch (const ParseError& e) {
        it.error = e.what();
      } catch (const Error& e) {
        it.error = at(e.what());
      } catch (const std::exception& e) {
        it.error = at(e.what());
        it.internal = true;
      }
    }
  };
  unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(items.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  json out;
  out["graphs"] = items.size();
  out["errors"] = json::array();
  const ScanItem* best = nullptr;
  std::map<int, const ScanItem*> per_n;
  // a/b < c/d for positive b, d
  auto less = [](const ScanItem& x, const ScanItem& y) {
    return static_cast<long long>(x.value) * y.n < static_cast<long long>(y.value) * x.n;
  };
  for (const auto& it : items) {
    if (it.internal) throw std::logic_error(it.error);
    if (!it.error.empty()) {
      err << it.error << "\n";
      if (o.abort_on_error) throw Error("scan aborted at " + it.error);
      out["errors"].push_back({{"line", it.line}, {"message", it.error}});
      continue;
    }
    if (!best || less(it, *best)) best = &it;
    auto [pos, fresh] = per_n.emplace(it.n, &it);
    if (!fresh && it.value < pos->second->value) pos->second = &it;
  }
  auto describe = [](const ScanItem& it) {
    return json{{"n", it.n},           {"value", it.value}, {"ratio", static_cast<double>(it.value) / it.n},
                {"line", it.line},     {"graph6", it.text}};
  };
  out["min"] = best ? describe(*best) : json(nullptr);
  out["per_n"] = json::array();
  for (const auto& [n, it] : per_n) out["per_n"].push_back(describe(*it));
  return out;
}

struct GenOptions {
  std::string family;
  int n = -1;
  std::string format = "graph6";
  std::uint64_t seed = 1;
  int density = 30;
};

inline Graph generate(const GenOptions& o) {
  const std::string& f = o.family;
  if (f == "octahedron") return apexiated_octahedron();
  if (o.n < 0) throw UsageError("family " + f + " needs a size");
  if (f == "path") return path(o.n);
  if (f == "cycle") return cycle(o.n);
  if (f == "complete") return complete(o.n);
  if (f == "star") return star(o.n);
  if (f == "matching") return matching_with_isolated(o.n);
  if (f == "triangular") return triangular_grid(o.n).graph;
  if (f == "random-forest") return random_forest(o.seed, o.n);
  if (f == "random-graph") return random_graph(o.seed, o.n, o.density);
  if (f == "random-pw2") return random_pw2(o.seed, o.n);
  throw UsageError("unknown family " + f);
}

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"path",         "cycle",         "complete",     "star",
                                              "matching",     "triangular",    "octahedron",   "random-forest",
                                              "random-graph", "random-pw2"};
  return names;
}

inline std::string cmd_gen(const GenOptions& o) {
  const Graph g = generate(o);
  return o.format == "edgelist" ? serialize_edge_list(g) : serialize_graph6(g) + "\n";
}

struct VerifyOptions {
  std::string input = "-";
  std::string set_file;
};

inline json cmd_verify(const VerifyOptions& o, std::istream& in) {
  const Graph g = read_graph(read_source(o.input, in));
  const VertexSet s = parse_vertex_set(read_source(o.set_file, in), g.order());
  const auto r = verify_indeque(g, s);
  if (auto* c = std::get_if<ClusterCertificate>(&r)) {
    if (!certificate_valid(g, *c) || c->covered() != s) throw std::logic_error("certificate failed re-validation");
  } else {
    const auto& p = std::get<P3Witness>(r);
    const bool inside = std::binary_search(s.begin(), s.end(), p.a) && std::binary_search(s.begin(), s.end(), p.b) &&
                        std::binary_search(s.begin(), s.end(), p.c);
    if (!inside || !g.adjacent(p.a, p.b) || !g.adjacent(p.b, p.c) || g.adjacent(p.a, p.c))
      throw std::logic_error("witness failed re-validation");
  }
  return r;
}

struct RatioTableOptions {
  std::string family;
  std::string range;
};

inline std::pair<int, int> parse_range(const std::string& r) {
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw UsageError("bad range \"" + r + "\"");
    return v;
  };
  const auto dots = r.find("..");
  if (dots == std::string::npos) {
    const int v = number(r);
    return {v, v};
  }
  const int lo = number(std::string_view(r).substr(0, dots));
  const int hi = number(std::string_view(r).substr(dots + 2));
  if (lo > hi) throw UsageError("empty range \"" + r + "\"");
  return {lo, hi};
}

// "n,vertices,value,ratio,method": exact by solve within the oracle limit,
// otherwise the best construction available, marked lower-bound.
inline std::string cmd_ratio_table(const RatioTableOptions& o) {
  if (o.family == "octahedron" || o.family.rfind("random", 0) == 0 ||
      std::find(family_names().begin(), family_names().end(), o.family) == family_names().end())
    throw UsageError("unknown family " + o.family + " for ratio-table");
  const auto [lo, hi] = parse_range(o.range);
  const int limit = oracle_limit_from_env();
  std::ostringstream out;
  out << "n,vertices,value,ratio,method\n";
  for (int n = lo; n <= hi; ++n) {
    const Graph g = generate({o.family, n});
    if (g.order() == 0) continue;
    VertexSet best;
    std::string method = "exact";
    if (g.order() <= limit) {
      best = solve(g).certificate.covered();
    } else {
      method = "lower-bound";
      auto consider = [&](VertexSet s) {
        if (s.size() > best.size()) best = std::move(s);
      };
      if (o.family == "triangular") consider(triangular_indeque_pattern(n));
      try {
        consider(indeque_pw2(g).set);
      } catch (const StructureMismatchError&) {
      }
      std::vector<char> in(g.order(), 0);
      detail::extend_to_maximal(g, in);
      VertexSet greedy;
      for (Vertex v = 0; v < g.order(); ++v)
        if (in[v]) greedy.push_back(v);
      consider(std::move(greedy));
    }
    checked_certificate(g, best);
    out << n << "," << g.order() << "," << best.size() << "," << std::fixed << std::setprecision(6)
        << static_cast<double>(best.size()) / g.order() << "," << method << "\n";
  }
  return out.str();
}

// Parses and dispatches; returns the process exit code.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and approximate indeque numbers", "indeque"};
  app.require_subcommand(1);

  SolveOptions so;
  auto* solve_cmd = app.add_subcommand("solve", "Maximum indeque set with certificate");
  solve_cmd->add_option("input", so.input, "graph6 or edge-list file, - for stdin");
  solve_cmd->add_option("--method", so.method)->check(CLI::IsMember({"brute", "branch"}));
  solve_cmd->add_flag("--enumerate-max", so.enumerate_max, "Also list achievable clique-size partitions");
  solve_cmd->add_option("--cap", so.cap, "Most maximum sets to enumerate");
  solve_cmd->add_option("--limit", so.limit, "Vertex limit for exhaustive methods");

  ApproxOptions ao;
  auto* approx_cmd = app.add_subcommand("approx", "Indeque set meeting a proven lower bound");
  approx_cmd->add_option("input", ao.input, "graph6 or edge-list file, - for stdin");
  approx_cmd->add_option("--method", ao.method)->check(CLI::IsMember({"forest", "pw2", "coloring"}));
  approx_cmd->add_option("--coloring", ao.coloring, "Acyclic colouring file (\"vertex colour\" lines)");
  approx_cmd->add_flag("--trace", ao.trace, "Include the step trace");
  approx_cmd->add_flag("--explain", ao.explain, "Print the block forest on stderr");

  ScanOptions sco;
  auto* scan_cmd = app.add_subcommand("scan", "Minimum value/n over a graph6 stream");
  scan_cmd->add_option("input", sco.input, "graph6 file, - for stdin");
  scan_cmd->add_option("-j,--jobs", sco.jobs, "Worker threads (default: all cores)");
  scan_cmd->add_flag("--abort-on-error", sco.abort_on_error, "Stop at the first malformed line");

  GenOptions go;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family member");
  gen_cmd->add_option("family", go.family)->required()->check(CLI::IsMember(family_names()));
  gen_cmd->add_option("n", go.n, "Size parameter");
  gen_cmd->add_option("--format", go.format)->check(CLI::IsMember({"graph6", "edgelist"}));
  gen_cmd->add_option("--seed", go.seed);
  gen_cmd->add_option("--density", go.density, "Edge percentage for random-graph")->check(CLI::Range(0, 100));

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a vertex set or exhibit an induced P3");
  verify_cmd->add_option("input", vo.input, "graph6 or edge-list file, - for stdin")->required();
  verify_cmd->add_option("set", vo.set_file, "File of vertex ids")->required();

  RatioTableOptions ro;
  auto* ratio_cmd = app.add_subcommand("ratio-table", "CSV of value/|V| over a size range");
  ratio_cmd->add_option("family", ro.family)->required();
  ratio_cmd->add_option("range", ro.range, "A..B or A")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*solve_cmd) out << cmd_solve(so, in).dump() << "\n";
    if (*approx_cmd) out << cmd_approx(ao, in, err).dump() << "\n";
    if (*scan_cmd) out << cmd_scan(sco, in, err).dump() << "\n";
    if (*gen_cmd) out << cmd_gen(go);
    if (*verify_cmd) out << cmd_verify(vo, in).dump() << "\n";
    if (*ratio_cmd) out << cmd_ratio_table(ro);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace indeque::cli
