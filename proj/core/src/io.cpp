// Copyright 2026 The chipfire Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "chipfire/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chipfire {

using ordered_json = nlohmann::ordered_json;

std::string graph_to_json(const Graph& g) {
  ordered_json j;
  if (const auto& grid = g.grid()) {
    j["m"] = grid->m;
    j["n"] = grid->n;
    j["toroidal"] = grid->toroidal;
  } else {
    j["m"] = nullptr;
    j["n"] = nullptr;
    j["toroidal"] = nullptr;
    j["vertex_count"] = g.vertex_count();
  }
  auto edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
    throw std::invalid_argument("graph JSON needs an \"edges\" array");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  try {
    for (const auto& e : j["edges"]) edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON edge: ") + e.what());
  }
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());

  if (j.contains("m") && j["m"].is_number_integer()) {
    const int m = j["m"].get<int>();
    const int n = j.value("n", 0);
    const bool toroidal = j.value("toroidal", false);
    Graph g = toroidal ? toroidal_queen_graph(m, n) : queen_graph(m, n);
    if (g.edges() != edges) throw std::invalid_argument("edge list does not match the declared board");
    return g;
  }
  if (!j.contains("vertex_count") || !j["vertex_count"].is_number_integer()) {
    throw std::invalid_argument("graph JSON needs either m/n or vertex_count");
  }
  return Graph::from_edges(j["vertex_count"].get<int>(), edges);
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  const auto& grid = g.grid();
  if (grid) {
    out << "graph " << (grid->toroidal ? "toroidal_queen_" : "queen_") << grid->m << "x" << grid->n << " {\n";
  } else {
    out << "graph G {\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"";
    if (grid) {
      out << "c" << grid->x(v) << "r" << grid->y(v);
    } else {
      out << "v" << v;
    }
    out << "\"];\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    const EdgeKindMask kinds = g.edge_kinds(u, v);
    if (has_kind(kinds, EdgeKind::Row)) {
      out << " [kind=\"row\"]";
    } else if (has_kind(kinds, EdgeKind::Column)) {
      out << " [kind=\"col\"]";
    } else if (has_kind(kinds, EdgeKind::DiagPos)) {
      out << " [kind=\"dp\"]";
    } else if (has_kind(kinds, EdgeKind::DiagNeg)) {
      out << " [kind=\"dn\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string divisor_to_json(const Divisor& d) {
  ordered_json j;
  j["values"] = d.values;
  return j.dump() + "\n";
}

Divisor parse_divisor(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw std::invalid_argument("empty divisor");
  text.remove_prefix(start);
  if (text.front() == '{') {
    try {
      const auto j = ordered_json::parse(text);
      return Divisor(j.at("values").get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("divisor JSON: ") + e.what());
    }
  }
  std::vector<std::int64_t> values;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && (token.front() == ' ' || token.front() == '+')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\n' || token.back() == '\r')) {
      token.remove_suffix(1);
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad divisor entry '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Divisor(std::move(values));
}

std::string burn_trace_text(const BurnReport& report) {
  std::ostringstream out;
  for (VertexId v : report.burned_order) out << v << "\n";
  out << "UNBURNED:";
  report.unburned.for_each([&](VertexId v) { out << " " << v; });
  out << "\n";
  return out.str();
}

}  // namespace chipfire
