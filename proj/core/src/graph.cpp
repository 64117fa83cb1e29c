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

#include "chipfire/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace chipfire {
namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

void check_board(int m, int n) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("board must be at least 2x2, got " + std::to_string(m) + "x" +
                                std::to_string(n));
  }
  if (static_cast<long long>(m) * n > kMaxVertices) {
    throw std::invalid_argument("board has more than " + std::to_string(kMaxVertices) + " cells");
  }
}

const GridSpec& require_grid(const Graph& g) {
  if (!g.grid()) throw std::invalid_argument("operation requires a grid-backed graph");
  return *g.grid();
}

int mod(int a, int b) { return ((a % b) + b) % b; }

}  // namespace

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges,
                        std::optional<GridSpec> grid) {
  std::vector<LabeledEdge> labeled;
  labeled.reserve(edges.size());
  for (auto [u, v] : edges) labeled.push_back({u, v, 0});
  return from_labeled_edges(vertex_count, labeled, grid);
}

Graph Graph::from_labeled_edges(int vertex_count, std::span<const LabeledEdge> edges,
                                std::optional<GridSpec> grid) {
  if (vertex_count < 1 || vertex_count > kMaxVertices) {
    throw std::invalid_argument("vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
  }
  if (grid && grid->vertex_count() != vertex_count) {
    throw std::invalid_argument("grid size does not match vertex count");
  }
  Graph g;
  const auto count = static_cast<std::size_t>(vertex_count);
  g.adjacency_.assign(count, VertexSet(count));
  g.neighbors_.assign(count, {});
  g.grid_ = grid;
  for (const auto& e : edges) {
    if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v)) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    g.adjacency_[static_cast<std::size_t>(e.u)].insert(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].insert(e.u);
    if (e.kinds != 0) g.kinds_.emplace(pair_key(e.u, e.v), e.kinds);
    ++g.edge_count_;
  }
  for (std::size_t v = 0; v < count; ++v) g.neighbors_[v] = g.adjacency_[v].to_vector();

  const auto dist = bfs_distances(g, 0);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw std::invalid_argument("graph is not connected");
  }
  return g;
}

EdgeKindMask Graph::edge_kinds(VertexId u, VertexId v) const {
  auto it = kinds_.find(pair_key(u, v));
  return it == kinds_.end() ? EdgeKindMask{0} : it->second;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

// Shared by both board graphs. Diagonal steps are taken modulo the board
// when toroidal, otherwise they stop at the edge.
Graph build_board(int m, int n, bool toroidal) {
  check_board(m, n);
  const GridSpec grid{m, n, toroidal};
  const int count = m * n;
  std::vector<EdgeKindMask> kinds(static_cast<std::size_t>(count) * static_cast<std::size_t>(count), 0);
  auto mark = [&](VertexId a, VertexId b, EdgeKind kind) {
    if (a == b) return;
    kinds[static_cast<std::size_t>(a) * count + b] |= kind_bit(kind);
    kinds[static_cast<std::size_t>(b) * count + a] |= kind_bit(kind);
  };
  const int period = std::lcm(m, n);
  for (VertexId u = 0; u < count; ++u) {
    const int x = grid.x(u);
    const int y = grid.y(u);
    for (int x2 = 0; x2 < m; ++x2) mark(u, grid.at(x2, y), EdgeKind::Row);
    for (int y2 = 0; y2 < n; ++y2) mark(u, grid.at(x, y2), EdgeKind::Column);
    if (toroidal) {
      for (int k = 1; k < period; ++k) {
        mark(u, grid.at(mod(x + k, m), mod(y + k, n)), EdgeKind::DiagPos);
        mark(u, grid.at(mod(x + k, m), mod(y - k, n)), EdgeKind::DiagNeg);
      }
    } else {
      for (int k = 1; x + k < m && y + k < n; ++k) mark(u, grid.at(x + k, y + k), EdgeKind::DiagPos);
      for (int k = 1; x + k < m && y - k >= 0; ++k) mark(u, grid.at(x + k, y - k), EdgeKind::DiagNeg);
    }
  }
  std::vector<LabeledEdge> edges;
  for (VertexId u = 0; u < count; ++u)
    for (VertexId v = u + 1; v < count; ++v)
      if (auto k = kinds[static_cast<std::size_t>(u) * count + v]; k != 0) edges.push_back({u, v, k});
  return Graph::from_labeled_edges(count, edges, grid);
}

}  // namespace

Graph queen_graph(int m, int n) { return build_board(m, n, false); }

Graph toroidal_queen_graph(int m, int n) { return build_board(m, n, true); }

Graph complete_graph(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
  if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    if (!g.valid_vertex(v)) throw std::out_of_range("invalid vertex id " + std::to_string(v));
    if (index[static_cast<std::size_t>(v)] >= 0) throw std::invalid_argument("repeated vertex");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<VertexId>(i), j, g.edge_kinds(vertices[i], w)});
    }
  }
  return Graph::from_labeled_edges(static_cast<int>(vertices.size()), edges);
}

int degree(const Graph& g, VertexId v) {
  if (!g.valid_vertex(v)) throw std::out_of_range("invalid vertex id " + std::to_string(v));
  return static_cast<int>(g.neighbors(v).size());
}

int min_degree(const Graph& g) {
  int best = g.vertex_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::min(best, degree(g, v));
  return best;
}

std::size_t cut_edge_count(const Graph& g, const VertexSet& u_set) {
  if (u_set.universe() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("vertex set universe does not match graph");
  }
  if (u_set.empty() || u_set.is_full()) throw std::invalid_argument("cut requires a proper nonempty subset");
  std::size_t inside = 0;
  std::size_t total_degree = 0;
  u_set.for_each([&](VertexId v) {
    inside += g.neighbor_set(v).intersection_size(u_set);
    total_degree += g.neighbors(v).size();
  });
  return total_degree - inside;
}

std::vector<VertexId> row_vertices(const Graph& g, int i) {
  const auto& grid = require_grid(g);
  if (i < 0 || i >= grid.n) throw std::out_of_range("row index " + std::to_string(i) + " out of range");
  std::vector<VertexId> out;
  for (int x = 0; x < grid.m; ++x) out.push_back(grid.at(x, i));
  return out;
}

std::vector<VertexId> column_vertices(const Graph& g, int j) {
  const auto& grid = require_grid(g);
  if (j < 0 || j >= grid.m) throw std::out_of_range("column index " + std::to_string(j) + " out of range");
  std::vector<VertexId> out;
  for (int y = 0; y < grid.n; ++y) out.push_back(grid.at(j, y));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<VertexId> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (VertexId w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace chipfire
