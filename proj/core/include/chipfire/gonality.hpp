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

#include <optional>
#include <string_view>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/independence.hpp"
#include "chipfire/limits.hpp"

namespace chipfire {

enum class GonalityMethod { Formula, ExactSearch, UpperBoundOnly };

std::string_view to_string(GonalityMethod method) noexcept;

struct GonalityReport {
  /// gon(G) unless method == UpperBoundOnly, in which case an upper bound.
  int value = 0;
  /// Positive-rank divisor of degree `value`.
  Divisor witness;
  GonalityMethod method = GonalityMethod::UpperBoundOnly;
  /// Every degree below this was exhausted without finding a positive-rank class.
  int lower_bound = 1;
};

enum class CorrespondenceMode { Full, InjectiveOnly };

struct CorrespondenceReport {
  int degree = 0;
  CorrespondenceMode mode = CorrespondenceMode::Full;
  /// Positive-rank class representatives (q-reduced at kCanonicalBase), sorted.
  /// Empty in InjectiveOnly mode.
  std::vector<Divisor> class_reps;
  std::vector<IndependentSet> mis_list;
  /// q-reduced image of 1_{S^c} for each entry of mis_list, same order.
  std::vector<Divisor> images;
  bool injective = false;
  /// Every image has positive rank.
  bool images_positive_rank = false;
  /// Every class representative is hit (Full mode only).
  bool surjective = false;
  /// S -> [1_{S^c}] is a bijection onto class_reps (Full) or injective with
  /// positive-rank images (InjectiveOnly).
  bool matched = false;
};

/// 1_{S^c}. Throws std::invalid_argument when s is not independent.
Divisor indep_divisor(const Graph& g, const IndependentSet& s);

/// |V| - alpha(G) with a verified witness.
GonalityReport gonality_upper_bound(const Graph& g, const SearchLimits& limits = {});

/// Exact gonality by exhausting q-reduced effective divisors of each degree
/// below the upper bound. If a level exceeds the composition cap, the report
/// degrades to UpperBoundOnly with the lower bound reached so far.
GonalityReport gonality_exact_small(const Graph& g, const SearchLimits& limits = {});

/// gon(Q_{m,n}); arguments in either order.
int queen_gonality_formula(int m, int n);
/// gon(TQ_{m,n}); arguments in either order.
int toroidal_gonality_formula(int m, int n);

/// Total compositions gonality_exact_small would enumerate on g, saturating.
std::uint64_t exact_search_cost(const Graph& g, int upper_bound);

/// One representative (q-reduced at kCanonicalBase) per positive-rank class of
/// degree d, sorted lexicographically. Throws CapExceeded.
std::vector<Divisor> enumerate_positive_rank_classes(const Graph& g, int d,
                                                     const SearchLimits& limits = {});

/// Checks S -> [1_{S^c}] against the positive-rank classes of degree d.
CorrespondenceReport verify_correspondence(const Graph& g, int d,
                                           CorrespondenceMode mode = CorrespondenceMode::Full,
                                           const SearchLimits& limits = {});

/// min over rows of the row chip sum. Requires a grid.
std::int64_t poorest_row_chips(const Graph& g, const Divisor& d);

/// Effective divisor equivalent to d maximizing poorest_row_chips, ties broken
/// by the lexicographically smallest vector. Exhaustive; throws CapExceeded,
/// and std::invalid_argument when the class has no effective member.
Divisor row_equitable_representative(const Graph& g, const Divisor& d,
                                     const SearchLimits& limits = {});

}  // namespace chipfire
