#pragma once

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sdim/blowup.hpp"
#include "sdim/graph.hpp"
#include "sdim/report.hpp"

namespace sdim::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
inline json parse_json(const std::string& text, const std::string& source = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError,
                source + " line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

namespace detail {
template <typename T>
T field(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, what + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, what + " field \"" + key + "\": " + e.what());
  }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Posets: {"labels":[...], "covers":[[i,j],...], "bottom":i, "top":j}

inline FinitePoset poset_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "poset must be a JSON object");
  auto labels = detail::field<std::vector<std::string>>(j, "labels", "poset");
  auto covers = detail::field<std::vector<std::pair<Element, Element>>>(j, "covers", "poset");
  std::optional<Element> bottom, top;
  if (j.contains("bottom")) bottom = detail::field<Element>(j, "bottom", "poset");
  if (j.contains("top")) top = detail::field<Element>(j, "top", "poset");
  for (auto b : {bottom, top})
    if (b && *b >= labels.size()) throw Error(ErrorCode::UnknownElement, "bottom/top index out of range");
  return FinitePoset::from_cover_relations(std::move(labels), covers, bottom, top);
}

/// Hasse diagram of the poset in the same format.
inline json poset_to_json(const FinitePoset& p) {
  json covers = json::array();
  for (Element hi = 0; hi < p.size(); ++hi) {
    Bits below = p.down_set(hi);
    below.reset(hi);
    for (Element lo : p.maximal_of(below)) covers.push_back({lo, hi});
  }
  json j{{"labels", p.labels()}, {"covers", covers}};
  if (p.bottom()) j["bottom"] = *p.bottom();
  if (p.top()) j["top"] = *p.top();
  return j;
}

// ---------------------------------------------------------------------------
// Blow-up specs: {"n":3, "chains":{"011":2, "100":3}}

inline BlowupSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "blow-up spec must be a JSON object");
  BlowupSpec spec;
  spec.n = detail::field<std::size_t>(j, "n", "blow-up spec");
  if (j.contains("chains")) {
    const json& chains = j.at("chains");
    if (!chains.is_object()) throw Error(ErrorCode::ParseError, "\"chains\" must be an object");
    for (auto& [key, value] : chains.items()) {
      if (key.size() != spec.n) throw Error(ErrorCode::InvalidSpec, "mask \"" + key + "\" must have n digits");
      if (!value.is_number_unsigned()) throw Error(ErrorCode::InvalidSpec, "chain size for " + key + " must be a positive integer");
      spec.chain_sizes[mask_from_string(key)] = value.get<std::size_t>();
    }
  }
  spec.validate();
  return spec;
}

inline json spec_to_json(const BlowupSpec& spec) {
  json chains = json::object();
  for (auto [mask, size] : spec.normalized().chain_sizes) chains[mask_to_string(mask, spec.n)] = size;
  return {{"n", spec.n}, {"chains", chains}};
}

// ---------------------------------------------------------------------------
// Graphs: {"labels":[...], "edges":[[i,j],...]} in canonical vertex order.

inline json graph_to_json(const SimpleGraph& g) {
  const SimpleGraph c = canonical(g);
  json edges = json::array();
  for (auto [u, v] : c.edges()) edges.push_back({u, v});
  return {{"labels", c.labels()}, {"edges", edges}};
}

inline SimpleGraph graph_from_json(const json& j) {
  auto labels = detail::field<std::vector<std::string>>(j, "labels", "graph");
  auto edges = detail::field<std::vector<std::pair<Vertex, Vertex>>>(j, "edges", "graph");
  SimpleGraph g(std::move(labels));
  for (auto [u, v] : edges) {
    if (u >= g.size() || v >= g.size() || u == v) throw Error(ErrorCode::ParseError, "bad edge in graph JSON");
    g.add_edge(u, v);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Reports.

inline json report_to_json(const SdimReport& r) {
  auto opt = [](const auto& v) -> json {
    if (v) return json(*v);
    return nullptr;
  };
  return {
      {"formula_value", opt(r.formula_value)},
      {"formula_note", r.formula_note},
      {"gsr_value", r.gsr_value},
      {"bruteforce_value", opt(r.bruteforce_value)},
      {"bruteforce_note", r.bruteforce_note},
      {"consistent", r.consistent()},
      {"vertex_count", r.vertex_count},
      {"gsr_vertex_count", r.gsr_vertex_count},
      {"gsr_independence_number", r.gsr_independence},
      {"witnesses",
       {{"vertex_cover", r.vertex_cover},
        {"strong_resolving_set", opt(r.strong_resolving_set)},
        {"boundary", r.boundary},
        {"n", opt(r.n)},
        {"m", opt(r.m)}}},
  };
}

}  // namespace sdim::io
