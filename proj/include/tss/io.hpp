#pragma once

// Instance text formats.
//
// JSON:
//   {"n": int, "edges": [[u,v],...], "thresholds": [int,...] | "majority", "budget": int}
//
// Edge list (whitespace separated):
//   n m k
//   u v            (m lines)
//   majority       (or n threshold values)
//
// Canonical output is JSON with sorted keys, no whitespace, and edges as [u,v]
// with u < v in lexicographic order.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tss/graph.hpp"

namespace tss {

using json = nlohmann::json;

namespace detail {

inline std::size_t json_index(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field + ": expected a non-negative integer");
  auto value = j.get<std::int64_t>();
  if (value < 0) throw ParseError(field + ": negative value " + std::to_string(value));
  return static_cast<std::size_t>(value);
}

inline Instance build_instance(std::size_t n, const std::vector<Edge>& edges,
                               std::optional<ThresholdMap> thresholds, std::size_t budget) {
  Graph g;
  try {
    g = Graph::from_edges(n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("edges: ") + e.what());
  }
  if (!thresholds) return Instance::majority(std::move(g), budget);
  if (thresholds->size() != n) {
    throw ParseError("thresholds: length " + std::to_string(thresholds->size()) +
                     " does not match n=" + std::to_string(n));
  }
  return Instance(std::move(g), std::move(*thresholds), budget);
}

inline Instance parse_instance_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  for (const char* key : {"n", "edges", "thresholds", "budget"}) {
    if (!j.contains(key)) throw ParseError(std::string(key) + ": missing field");
  }
  std::size_t n = json_index(j["n"], "n");
  std::size_t budget = json_index(j["budget"], "budget");

  const json& je = j["edges"];
  if (!je.is_array()) throw ParseError("edges: expected an array");
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (std::size_t i = 0; i < je.size(); ++i) {
    std::string field = "edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 2) throw ParseError(field + ": expected [u,v]");
    edges.emplace_back(json_index(je[i][0], field), json_index(je[i][1], field));
  }

  std::optional<ThresholdMap> thresholds;
  const json& jt = j["thresholds"];
  if (jt.is_string()) {
    if (jt.get<std::string>() != "majority")
      throw ParseError("thresholds: expected an array or \"majority\"");
  } else if (jt.is_array()) {
    thresholds.emplace();
    for (std::size_t i = 0; i < jt.size(); ++i)
      thresholds->push_back(json_index(jt[i], "thresholds[" + std::to_string(i) + "]"));
  } else {
    throw ParseError("thresholds: expected an array or \"majority\"");
  }
  return build_instance(n, edges, std::move(thresholds), budget);
}

// Tokenizer for the edge-list format that tracks line numbers for error messages.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::string_view text) : text_(text) {}

  bool next(std::string& token) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= text_.size()) return false;
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    token.assign(text_.substr(start, pos_ - start));
    return true;
  }

  std::size_t integer(const std::string& what) {
    std::string tok;
    if (!next(tok)) throw ParseError(where() + what + ": unexpected end of input");
    return to_index(tok, what);
  }

  std::size_t to_index(const std::string& tok, const std::string& what) const {
    if (tok.empty() || tok.size() > 18 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      if (!tok.empty() && tok[0] == '-') throw ParseError(where() + what + ": negative value " + tok);
      throw ParseError(where() + what + ": expected a non-negative integer, got '" + tok + "'");
    }
    return static_cast<std::size_t>(std::stoull(tok));
  }

  std::string where() const { return "line " + std::to_string(line_) + ": "; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

inline Instance parse_instance_edge_list(std::string_view text) {
  EdgeListReader in(text);
  std::size_t n = in.integer("n");
  std::size_t m = in.integer("m");
  std::size_t budget = in.integer("budget");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string what = "edge " + std::to_string(i);
    std::size_t u = in.integer(what);
    std::size_t v = in.integer(what);
    edges.emplace_back(u, v);
  }
  std::string tok;
  if (!in.next(tok)) throw ParseError(in.where() + "thresholds: unexpected end of input");
  std::optional<ThresholdMap> thresholds;
  if (tok != "majority") {
    thresholds.emplace();
    thresholds->push_back(in.to_index(tok, "thresholds[0]"));
    for (std::size_t i = 1; i < n; ++i)
      thresholds->push_back(in.integer("thresholds[" + std::to_string(i) + "]"));
  }
  if (in.next(tok)) throw ParseError(in.where() + "trailing content '" + tok + "'");
  return build_instance(n, edges, std::move(thresholds), budget);
}

}  // namespace detail

// Accepts either format; JSON is recognized by a leading '{'.
inline Instance parse_instance(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return detail::parse_instance_json(text);
  return detail::parse_instance_edge_list(text);
}

inline json instance_to_json(const Instance& inst) {
  json edges = json::array();
  for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
  json j;
  j["n"] = inst.size();
  j["edges"] = std::move(edges);
  j["thresholds"] = inst.thresholds;
  j["budget"] = inst.budget;
  return j;
}

inline std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

inline std::string serialize_edge_list(const Instance& inst) {
  std::ostringstream out;
  out << inst.size() << ' ' << inst.graph.edge_count() << ' ' << inst.budget << '\n';
  for (auto [u, v] : inst.graph.edges()) out << u << ' ' << v << '\n';
  if (is_majority(inst.graph, inst.thresholds)) {
    out << "majority\n";
  } else {
    for (Threshold t : inst.thresholds) out << t << '\n';
  }
  return out.str();
}

// Seeds are written as {"seed":[...],"size":N}; a bare array is also accepted on input.
inline VertexSet parse_seed(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("seed")) throw ParseError("seed: missing field");
    arr = &j["seed"];
  }
  if (!arr->is_array()) throw ParseError("seed: expected an array");
  VertexSet s;
  for (std::size_t i = 0; i < arr->size(); ++i)
    s.push_back(detail::json_index((*arr)[i], "seed[" + std::to_string(i) + "]"));
  return normalized(std::move(s));
}

inline json seed_to_json(const VertexSet& seed) {
  json j;
  j["seed"] = seed;
  j["size"] = seed.size();
  return j;
}

}  // namespace tss
