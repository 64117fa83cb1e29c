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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chipfire/vertex_set.hpp"

namespace chipfire {

/// Board geometry: m columns, n rows. Vertex (x, y) has id y * m + x, so ids
/// run row-major from the bottom-left corner.
struct GridSpec {
  int m = 0;
  int n = 0;
  bool toroidal = false;

  int vertex_count() const noexcept { return m * n; }
  int x(VertexId v) const noexcept { return v % m; }
  int y(VertexId v) const noexcept { return v / m; }
  VertexId at(int x, int y) const noexcept { return y * m + x; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Queen-move relations. One vertex pair may carry several on small tori.
enum class EdgeKind : std::uint8_t { Row = 1, Column = 2, DiagPos = 4, DiagNeg = 8 };
using EdgeKindMask = std::uint8_t;

constexpr EdgeKindMask kind_bit(EdgeKind k) noexcept { return static_cast<EdgeKindMask>(k); }
constexpr bool has_kind(EdgeKindMask mask, EdgeKind k) noexcept { return (mask & kind_bit(k)) != 0; }

struct LabeledEdge {
  VertexId u;
  VertexId v;
  EdgeKindMask kinds = 0;
};

inline constexpr int kMaxVertices = 4096;

/// Immutable, connected, simple undirected graph.
class Graph {
 public:
  /// Builds a graph from an edge list. Throws std::invalid_argument on
  /// self-loops, duplicate edges, out-of-range ids, or a disconnected result.
  static Graph from_edges(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges,
                          std::optional<GridSpec> grid = std::nullopt);
  static Graph from_labeled_edges(int vertex_count, std::span<const LabeledEdge> edges,
                                  std::optional<GridSpec> grid = std::nullopt);

  int vertex_count() const noexcept { return static_cast<int>(neighbors_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const VertexSet& neighbor_set(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::span<const VertexId> neighbors(VertexId v) const { return neighbors_[static_cast<std::size_t>(v)]; }
  bool adjacent(VertexId u, VertexId v) const { return adjacency_[static_cast<std::size_t>(u)].contains(v); }

  /// Kind labels of edge {u, v}; 0 when unlabeled or not an edge.
  EdgeKindMask edge_kinds(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  const std::optional<GridSpec>& grid() const noexcept { return grid_; }
  bool valid_vertex(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }

 private:
  Graph() = default;

  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::unordered_map<std::uint64_t, EdgeKindMask> kinds_;
  std::size_t edge_count_ = 0;
  std::optional<GridSpec> grid_;
};

/// Q_{m,n}: same row, same column, or a common diagonal of slope ±1.
Graph queen_graph(int m, int n);

/// TQ_{m,n}: queen_graph plus diagonals taken modulo (m, n).
Graph toroidal_queen_graph(int m, int n);

Graph complete_graph(int n);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

int degree(const Graph& g, VertexId v);
int min_degree(const Graph& g);

/// |E(U, U^c)|. Throws std::invalid_argument when U is empty or all of V.
std::size_t cut_edge_count(const Graph& g, const VertexSet& u_set);

/// Vertices with y == i, ascending by x. Requires a grid.
std::vector<VertexId> row_vertices(const Graph& g, int i);
/// Vertices with x == j, ascending by y. Requires a grid.
std::vector<VertexId> column_vertices(const Graph& g, int j);

/// Breadth-first distances from `source`.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

}  // namespace chipfire
