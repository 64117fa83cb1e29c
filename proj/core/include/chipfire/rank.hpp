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

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/limits.hpp"

namespace chipfire {

struct RankResult {
  /// Exact rank when `exact`, otherwise a lower bound equal to the requested max_k.
  int rank = -1;
  bool exact = true;
  /// Effective E of degree rank + 1 with D - E not equivalent to an effective
  /// divisor. Present whenever `exact` is true.
  std::optional<Divisor> certificate;
};

/// True iff the class of d contains an effective divisor.
bool effective_in_class(const Graph& g, const Divisor& d);

/// r(d) >= 1: every single-chip debt can be absorbed.
bool has_positive_rank(const Graph& g, const Divisor& d);

/// Rank by exhaustive enumeration of effective debt placements E, degree by
/// degree, in colex order. The first failing E (colex-minimal) becomes the
/// certificate. Throws CapExceeded when a degree level has more than
/// limits.max_compositions placements.
RankResult rank(const Graph& g, const Divisor& d, int max_k, const SearchLimits& limits = {});

}  // namespace chipfire
