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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/vertex_set.hpp"

namespace chipfire {

/// Chips per vertex; negative entries are debt.
struct Divisor {
  std::vector<std::int64_t> values;

  Divisor() = default;
  explicit Divisor(std::vector<std::int64_t> v) : values(std::move(v)) {}

  static Divisor zero(int vertex_count);
  /// One chip on every vertex of `s`.
  static Divisor indicator(const VertexSet& s);
  /// One chip on `v`.
  static Divisor unit(int vertex_count, VertexId v);

  std::size_t size() const noexcept { return values.size(); }
  std::int64_t& operator[](VertexId v) { return values[static_cast<std::size_t>(v)]; }
  std::int64_t operator[](VertexId v) const { return values[static_cast<std::size_t>(v)]; }

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor& a, const Divisor& b) { return a.values <=> b.values; }
};

/// Net number of times each vertex fired. Applying it maps D to D - L * fires.
/// Scripts produced by this library are normalized to a minimum entry of 0.
struct FiringScript {
  std::vector<std::int64_t> fires;

  friend bool operator==(const FiringScript&, const FiringScript&) = default;
};

struct BurnReport {
  std::vector<VertexId> burned_order;
  VertexSet unburned;

  bool fully_burned() const noexcept { return unburned.empty(); }
};

std::int64_t divisor_degree(const Divisor& d) noexcept;
bool is_effective(const Divisor& d) noexcept;

/// Every vertex of U sends one chip along each edge leaving U. No legality check.
Divisor fire_set(const Graph& g, const Divisor& d, const VertexSet& u_set);

/// Fires U `times` times at once (negative means reverse-firing).
Divisor fire_set_times(const Graph& g, const Divisor& d, const VertexSet& u_set, std::int64_t times);

/// True when no vertex of U is in debt before or after firing U.
bool is_legal_firing(const Graph& g, const Divisor& d, const VertexSet& u_set);

/// D - L * script.
Divisor apply_script(const Graph& g, const Divisor& d, const FiringScript& script);

/// Shifts a script so its minimum entry is 0; the action on divisors is unchanged.
FiringScript normalize_script(FiringScript script);

/// Dhar's burning algorithm from q. Burned vertices are processed in
/// ascending id order, so burned_order is deterministic. Requires
/// d(v) >= 0 for every v != q (std::invalid_argument otherwise).
BurnReport dhar_burn(const Graph& g, const Divisor& d, VertexId q);

/// True iff d is q-reduced (non-negative away from q and Dhar burns everything).
bool is_q_reduced(const Graph& g, const Divisor& d, VertexId q);

struct Reduction {
  Divisor divisor;
  FiringScript script;
};

/// The unique q-reduced divisor equivalent to d, with a firing script s
/// such that divisor == d - L * s.
Reduction q_reduce(const Graph& g, const Divisor& d, VertexId q);

/// Base vertex used wherever a canonical class representative is needed.
inline constexpr VertexId kCanonicalBase = 0;

/// Linear equivalence: equal degree and equal q-reduced forms at kCanonicalBase.
bool equivalent(const Graph& g, const Divisor& d1, const Divisor& d2);

}  // namespace chipfire
