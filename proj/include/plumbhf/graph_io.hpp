#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace plumbhf {

namespace detail {

inline i64 parse_i64(const std::string& tok, const std::string& where) {
  std::size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw InputError(where + ": expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw InputError(where + ": expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

// Text format, one item per line, '#' starts a comment:
//   v <id> <weight>
//   e <id> <id>
inline PlumbingGraph parse_graph_text(const std::string& text) {
  std::vector<std::pair<i64, i64>> vertices;
  std::vector<std::pair<i64, i64>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank or comment-only line
    const std::string where = "line " + std::to_string(lineno);
    std::string a, b;
    if (!(ls >> a >> b)) throw InputError(where + ": expected two fields after '" + kind + "'");
    std::string extra;
    if (ls >> extra) throw InputError(where + ": unexpected trailing field '" + extra + "'");
    if (kind == "v")
      vertices.emplace_back(detail::parse_i64(a, where), detail::parse_i64(b, where));
    else if (kind == "e")
      edges.emplace_back(detail::parse_i64(a, where), detail::parse_i64(b, where));
    else
      throw InputError(where + ": unknown item '" + kind + "' (expected 'v' or 'e')");
  }
  if (vertices.empty()) throw InputError("graph input declares no vertices");
  return PlumbingGraph(vertices, edges);
}

// JSON alternative: {"vertices":[{"id":0,"weight":-1},...],"edges":[[0,1],...]}
inline PlumbingGraph parse_graph_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices"))
    throw InputError("graph JSON must be an object with a 'vertices' array");
  std::vector<std::pair<i64, i64>> vertices;
  std::vector<std::pair<i64, i64>> edges;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_object() || !v.contains("id") || !v.contains("weight"))
      throw InputError("each vertex must be {\"id\": int, \"weight\": int}");
    vertices.emplace_back(v.at("id").get<i64>(), v.at("weight").get<i64>());
  }
  if (doc.contains("edges"))
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw InputError("each edge must be a two-element array of vertex ids");
      edges.emplace_back(e.at(0).get<i64>(), e.at(1).get<i64>());
    }
  return PlumbingGraph(vertices, edges);
}

inline PlumbingGraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph JSON parse error: ") + e.what());
  }
  return parse_graph_json(doc);
}

// Auto-detect: JSON documents start with '{'.
inline PlumbingGraph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  throw InputError("empty graph input");
}

inline std::string graph_to_text(const PlumbingGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.size(); ++v)
    out << "v " << g.original_id(v) << ' ' << g.weight(v) << '\n';
  for (auto [a, b] : g.edges())
    out << "e " << g.original_id(a) << ' ' << g.original_id(b) << '\n';
  return out.str();
}

inline nlohmann::ordered_json graph_to_json(const PlumbingGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.size(); ++v)
    doc["vertices"].push_back({{"id", g.original_id(v)}, {"weight", g.weight(v)}});
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges())
    doc["edges"].push_back({g.original_id(a), g.original_id(b)});
  return doc;
}

inline std::string graph_to_dot(const PlumbingGraph& g) {
  std::ostringstream out;
  out << "graph plumbing {\n  node [shape=circle];\n";
  for (int v = 0; v < g.size(); ++v)
    out << "  v" << g.original_id(v) << " [label=\"" << g.original_id(v) << ": " << g.weight(v)
        << "\"];\n";
  for (auto [a, b] : g.edges())
    out << "  v" << g.original_id(a) << " -- v" << g.original_id(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace plumbhf
