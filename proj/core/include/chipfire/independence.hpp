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

#include <compare>
#include <span>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/limits.hpp"

namespace chipfire {

/// Vertex set with no internal edges, members ascending.
struct IndependentSet {
  std::vector<VertexId> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
  friend auto operator<=>(const IndependentSet& a, const IndependentSet& b) {
    return a.vertices <=> b.vertices;
  }
};

bool is_independent(const Graph& g, std::span<const VertexId> s);
bool is_independent(const Graph& g, const VertexSet& s);

struct MaxIndependentSets {
  int alpha = 0;
  /// Every independent set of size alpha, sorted lexicographically.
  std::vector<IndependentSet> sets;
};

/// Partition of V into cliques used to bound the search: rows or columns of a
/// grid graph (whichever gives fewer parts), otherwise a greedy partition.
std::vector<std::vector<VertexId>> clique_cover(const Graph& g);

/// Exact alpha(G) and all maximum independent sets by branch and bound over a
/// clique cover. Throws CapExceeded above limits.max_mis_vertices.
MaxIndependentSets max_independent_sets(const Graph& g, const SearchLimits& limits = {});

/// alpha(Q_{m,n}); arguments in either order. Throws std::invalid_argument below 2.
int queen_alpha_formula(int m, int n);

/// alpha(TQ_{m,n}); arguments in either order.
int toroidal_alpha_formula(int m, int n);

}  // namespace chipfire
