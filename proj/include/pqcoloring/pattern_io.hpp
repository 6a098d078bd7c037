#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqcoloring/patterns.hpp"

namespace pqc {

namespace detail {

inline std::string kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::ClassPattern: return "class-pattern";
    case PatternKind::MonoOddCycle: return "mono-odd-cycle";
    default: return "color-cycle";
  }
}

inline PatternKind kind_from(const std::string& s) {
  if (s == "class-pattern") return PatternKind::ClassPattern;
  if (s == "mono-odd-cycle") return PatternKind::MonoOddCycle;
  if (s == "color-cycle") return PatternKind::ColorCycle;
  throw std::invalid_argument("unknown pattern kind: " + s);
}

inline std::string scope_name(ColorScope s) {
  switch (s) {
    case ColorScope::Cfls: return "cfls";
    case ColorScope::Algebraic: return "algebraic";
    default: return "product";
  }
}

inline ColorScope scope_from(const std::string& s) {
  if (s == "cfls") return ColorScope::Cfls;
  if (s == "algebraic") return ColorScope::Algebraic;
  if (s == "product") return ColorScope::Product;
  throw std::invalid_argument("unknown pattern scope: " + s);
}

}  // namespace detail

inline nlohmann::json to_json(const ForbiddenPattern& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["kind"] = detail::kind_name(p.kind);
  j["scope"] = detail::scope_name(p.scope);
  if (p.kind == PatternKind::ClassPattern) {
    j["k"] = p.k;
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : p.classes) {
      nlohmann::json edges = nlohmann::json::array();
      for (const PatternEdge& e : cls) edges.push_back({e.u, e.v});
      classes.push_back(edges);
    }
    j["classes"] = classes;
    if (!p.distinct_classes.empty()) {
      nlohmann::json dc = nlohmann::json::array();
      for (auto [a, b] : p.distinct_classes) dc.push_back({a, b});
      j["distinct_classes"] = dc;
    }
  }
  return j;
}

inline ForbiddenPattern pattern_from_json(const nlohmann::json& j) {
  ForbiddenPattern p;
  p.name = j.at("name").get<std::string>();
  p.kind = detail::kind_from(j.at("kind").get<std::string>());
  if (j.contains("scope"))
    p.scope = detail::scope_from(j.at("scope").get<std::string>());
  if (p.kind == PatternKind::ClassPattern) {
    p.k = j.at("k").get<int>();
    for (const auto& cls : j.at("classes")) {
      std::vector<PatternEdge> edges;
      for (const auto& e : cls)
        edges.push_back({e.at(0).get<uint8_t>(), e.at(1).get<uint8_t>()});
      p.classes.push_back(std::move(edges));
    }
    if (j.contains("distinct_classes"))
      for (const auto& dc : j.at("distinct_classes"))
        p.distinct_classes.emplace_back(dc.at(0).get<int>(),
                                        dc.at(1).get<int>());
  }
  validate_pattern(p);
  return p;
}

inline void save_patterns(std::ostream& os,
                          const std::vector<ForbiddenPattern>& patterns) {
  nlohmann::json j = nlohmann::json::array();
  for (const ForbiddenPattern& p : patterns) j.push_back(to_json(p));
  os << j.dump(2) << '\n';
}

inline std::vector<ForbiddenPattern> load_patterns(std::istream& is) {
  nlohmann::json j;
  is >> j;
  if (!j.is_array()) throw std::invalid_argument("pattern file: expected array");
  std::vector<ForbiddenPattern> out;
  for (const auto& item : j) out.push_back(pattern_from_json(item));
  return out;
}

}  // namespace pqc
