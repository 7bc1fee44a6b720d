#pragma once

#include <variant>

#include <json.hpp>

#include "indeque/exact.hpp"
#include "indeque/verify.hpp"

namespace indeque {

inline void to_json(nlohmann::json& j, const ClusterCertificate& c) {
  j = nlohmann::json{{"size", c.size()}, {"cliques", c.cliques}};
}

inline void to_json(nlohmann::json& j, const P3& p) { j = nlohmann::json{{"p3", {p.a, p.b, p.c}}}; }

inline void to_json(nlohmann::json& j, const VerifyResult& r) {
  std::visit([&](const auto& x) { to_json(j, x); }, r);
}

inline void to_json(nlohmann::json& j, const SolveStats& s) { j = nlohmann::json{{"nodes", s.nodes}, {"ms", s.ms}}; }

inline void to_json(nlohmann::json& j, const SolveResult& r) {
  j = nlohmann::json{{"value", r.value}, {"certificate", r.certificate}, {"optimal", r.optimal}, {"stats", r.stats}};
}

}  // namespace indeque
