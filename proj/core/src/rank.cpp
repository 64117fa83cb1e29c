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

#include "chipfire/rank.hpp"

#include <mutex>
#include <stdexcept>

#include "chipfire/compositions.hpp"
#include "parallel.hpp"

namespace chipfire {

bool effective_in_class(const Graph& g, const Divisor& d) {
  if (divisor_degree(d) < 0) return false;
  return q_reduce(g, d, kCanonicalBase).divisor[kCanonicalBase] >= 0;
}

bool has_positive_rank(const Graph& g, const Divisor& d) {
  if (divisor_degree(d) < 1) return false;
  for (VertexId q = 0; q < g.vertex_count(); ++q) {
    if (q_reduce(g, d, q).divisor[q] < 1) return false;
  }
  return true;
}

namespace {

// Colex-first E of degree k with d - E outside the effective cone, if any.
// Work is split by the chip count on vertex 0; each part scans in colex order
// and stops at its own first failure, and the colex minimum wins.
std::optional<Divisor> first_unabsorbed(const Graph& g, const Divisor& d, int k, const SearchLimits& limits) {
  const auto count = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::optional<Divisor>> failures(static_cast<std::size_t>(k) + 1);
  detail::parallel_for(failures.size(), limits.threads, [&](std::size_t first_chips) {
    Divisor e = Divisor::zero(static_cast<int>(count));
    e.values[0] = static_cast<std::int64_t>(first_chips);
    std::span<std::int64_t> rest(e.values.data() + 1, count - 1);
    for_each_composition(rest, k - static_cast<std::int64_t>(first_chips), [&](std::span<std::int64_t>) {
      if (effective_in_class(g, d - e)) return true;
      failures[first_chips] = e;
      return false;
    });
  });
  std::optional<Divisor> best;
  for (auto& f : failures) {
    if (f && (!best || colex_less(f->values, best->values))) best = std::move(f);
  }
  return best;
}

}  // namespace

RankResult rank(const Graph& g, const Divisor& d, int max_k, const SearchLimits& limits) {
  if (max_k < 0) throw std::invalid_argument("max_k must be non-negative");
  if (d.size() != static_cast<std::size_t>(g.vertex_count())) throw std::invalid_argument("divisor length mismatch");
  const int count = g.vertex_count();
  if (!effective_in_class(g, d)) return RankResult{-1, true, Divisor::zero(count)};
  for (int k = 1; k <= max_k; ++k) {
    const auto placements = composition_count(static_cast<std::uint64_t>(count), static_cast<std::uint64_t>(k));
    if (placements > limits.max_compositions) {
      throw CapExceeded("max-compositions", limits.max_compositions, placements);
    }
    if (auto failure = first_unabsorbed(g, d, k, limits)) return RankResult{k - 1, true, std::move(failure)};
  }
  return RankResult{max_k, false, std::nullopt};
}

}  // namespace chipfire
