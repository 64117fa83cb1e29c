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

#include "chipfire/gonality.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "chipfire/compositions.hpp"
#include "chipfire/rank.hpp"
#include "parallel.hpp"

namespace chipfire {

std::string_view to_string(GonalityMethod method) noexcept {
  switch (method) {
    case GonalityMethod::Formula:
      return "formula";
    case GonalityMethod::ExactSearch:
      return "exact-search";
    case GonalityMethod::UpperBoundOnly:
      return "upper-bound-only";
  }
  return "unknown";
}

Divisor indep_divisor(const Graph& g, const IndependentSet& s) {
  if (!is_independent(g, s.vertices)) throw std::invalid_argument("vertex set is not independent");
  return Divisor::indicator(VertexSet(static_cast<std::size_t>(g.vertex_count()), s.vertices).complement());
}

GonalityReport gonality_upper_bound(const Graph& g, const SearchLimits& limits) {
  const auto mis = max_independent_sets(g, limits);
  GonalityReport report;
  report.value = g.vertex_count() - mis.alpha;
  report.witness = indep_divisor(g, mis.sets.front());
  report.method = GonalityMethod::UpperBoundOnly;
  report.lower_bound = 1;
  if (!has_positive_rank(g, report.witness)) {
    throw std::logic_error("independent-set divisor failed the positive rank check");
  }
  return report;
}

std::uint64_t exact_search_cost(const Graph& g, int upper_bound) {
  std::uint64_t total = 0;
  for (int d = 1; d < upper_bound; ++d) {
    total = saturating_add(total, composition_count(static_cast<std::uint64_t>(g.vertex_count()),
                                                    static_cast<std::uint64_t>(d)));
  }
  return total;
}

std::vector<Divisor> enumerate_positive_rank_classes(const Graph& g, int d, const SearchLimits& limits) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  const auto count = static_cast<std::size_t>(g.vertex_count());
  const auto placements = composition_count(count, static_cast<std::uint64_t>(d));
  if (placements > limits.max_compositions) {
    throw CapExceeded("max-compositions", limits.max_compositions, placements);
  }
  std::vector<int> degrees(count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees[static_cast<std::size_t>(v)] = degree(g, v);

  // A class representative q-reduced at the base has positive rank only if it
  // keeps a chip on the base, so the base count starts at 1.
  std::vector<std::vector<Divisor>> found(static_cast<std::size_t>(d) + 1);
  detail::parallel_for(found.size(), limits.threads, [&](std::size_t base_chips) {
    if (base_chips == 0) return;
    Divisor e = Divisor::zero(static_cast<int>(count));
    e.values[kCanonicalBase] = static_cast<std::int64_t>(base_chips);
    std::span<std::int64_t> rest(e.values.data() + 1, count - 1);
    for_each_composition(rest, d - static_cast<std::int64_t>(base_chips), [&](std::span<std::int64_t> r) {
      // A vertex holding at least its degree can fire legally on its own.
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] >= degrees[i + 1]) return true;
      if (dhar_burn(g, e, kCanonicalBase).fully_burned() && has_positive_rank(g, e)) {
        found[base_chips].push_back(e);
      }
      return true;
    });
  });
  std::vector<Divisor> out;
  for (auto& part : found)
    for (auto& div : part) out.push_back(std::move(div));
  std::sort(out.begin(), out.end());
  return out;
}

GonalityReport gonality_exact_small(const Graph& g, const SearchLimits& limits) {
  GonalityReport bound = gonality_upper_bound(g, limits);
  for (int d = 1; d < bound.value; ++d) {
    std::vector<Divisor> classes;
    try {
      classes = enumerate_positive_rank_classes(g, d, limits);
    } catch (const CapExceeded&) {
      bound.lower_bound = d;
      return bound;
    }
    if (!classes.empty()) return GonalityReport{d, classes.front(), GonalityMethod::ExactSearch, d};
  }
  bound.method = GonalityMethod::ExactSearch;
  bound.lower_bound = bound.value;
  return bound;
}

namespace {

std::pair<int, int> normalized(int m, int n) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("board must be at least 2x2, got " + std::to_string(m) + "x" + std::to_string(n));
  }
  return {std::max(m, n), std::min(m, n)};
}

}  // namespace

int queen_gonality_formula(int m, int n) {
  const auto [big, small] = normalized(m, n);
  if (big == 2 && small == 2) return 3;
  if (big == 3 && small == 3) return 7;
  return small * (big - 1);
}

int toroidal_gonality_formula(int m, int n) {
  const auto [big, small] = normalized(m, n);
  return big * small - toroidal_alpha_formula(big, small);
}

CorrespondenceReport verify_correspondence(const Graph& g, int d, CorrespondenceMode mode,
                                           const SearchLimits& limits) {
  CorrespondenceReport report;
  report.degree = d;
  report.mode = mode;
  auto mis = max_independent_sets(g, limits);
  report.mis_list = std::move(mis.sets);

  report.images.reserve(report.mis_list.size());
  for (const auto& s : report.mis_list) {
    report.images.push_back(q_reduce(g, indep_divisor(g, s), kCanonicalBase).divisor);
  }
  const std::set<Divisor> distinct(report.images.begin(), report.images.end());
  report.injective = distinct.size() == report.images.size();
  report.images_positive_rank = std::all_of(report.images.begin(), report.images.end(),
                                            [&](const Divisor& img) { return has_positive_rank(g, img); });
  const bool right_degree = g.vertex_count() - mis.alpha == d;

  if (mode == CorrespondenceMode::InjectiveOnly) {
    report.matched = right_degree && report.injective && report.images_positive_rank;
    return report;
  }
  report.class_reps = enumerate_positive_rank_classes(g, d, limits);
  report.surjective = std::all_of(report.class_reps.begin(), report.class_reps.end(),
                                  [&](const Divisor& rep) { return distinct.contains(rep); });
  report.matched = right_degree && report.injective && report.images_positive_rank && report.surjective &&
                   report.class_reps.size() == report.images.size();
  return report;
}

std::int64_t poorest_row_chips(const Graph& g, const Divisor& d) {
  if (!g.grid()) throw std::invalid_argument("poorest row needs a grid-backed graph");
  if (d.size() != static_cast<std::size_t>(g.vertex_count())) throw std::invalid_argument("divisor length mismatch");
  if (!is_effective(d)) throw std::invalid_argument("poorest row is defined for effective divisors");
  const auto& grid = *g.grid();
  std::int64_t poorest = std::numeric_limits<std::int64_t>::max();
  for (int y = 0; y < grid.n; ++y) {
    std::int64_t row = 0;
    for (int x = 0; x < grid.m; ++x) row += d[grid.at(x, y)];
    poorest = std::min(poorest, row);
  }
  return poorest;
}

namespace {

// Visits every effective divisor of the given row sums. Rows are contiguous
// id ranges in row-major numbering.
template <class Visit>
void for_each_with_row_sums(Divisor& e, const GridSpec& grid, std::span<const std::int64_t> row_sums,
                            int row, Visit& visit) {
  if (row == grid.n) {
    visit(e);
    return;
  }
  std::span<std::int64_t> cells(e.values.data() + static_cast<std::size_t>(row) * grid.m,
                                static_cast<std::size_t>(grid.m));
  for_each_composition(cells, row_sums[static_cast<std::size_t>(row)], [&](std::span<std::int64_t>) {
    for_each_with_row_sums(e, grid, row_sums, row + 1, visit);
    return true;
  });
}

}  // namespace

Divisor row_equitable_representative(const Graph& g, const Divisor& d, const SearchLimits& limits) {
  if (!g.grid()) throw std::invalid_argument("row-equitable representative needs a grid-backed graph");
  const GridSpec grid = *g.grid();
  const Divisor target = q_reduce(g, d, kCanonicalBase).divisor;
  if (target[kCanonicalBase] < 0) throw std::invalid_argument("divisor class has no effective member");
  const std::int64_t deg = divisor_degree(d);
  const auto rows = static_cast<std::size_t>(grid.n);
  const auto row_cells = static_cast<std::uint64_t>(grid.m);

  // Walk the poorest-row target downward; the first level with an equivalent
  // effective divisor is the maximum.
  std::uint64_t enumerated = 0;
  std::vector<std::int64_t> extra(rows);
  std::vector<std::int64_t> row_sums(rows);
  for (std::int64_t floor_chips = deg / grid.n; floor_chips >= 0; --floor_chips) {
    const std::int64_t spare = deg - floor_chips * grid.n;

    std::uint64_t level = 0;
    for_each_composition(std::span(extra), spare, [&](std::span<std::int64_t> ex) {
      std::uint64_t product = 1;
      for (std::size_t i = 0; i < rows; ++i) {
        product = saturating_mul(product, composition_count(row_cells, static_cast<std::uint64_t>(floor_chips + ex[i])));
      }
      level = saturating_add(level, product);
      return level <= limits.max_compositions;
    });
    enumerated = saturating_add(enumerated, level);
    if (enumerated > limits.max_compositions) {
      throw CapExceeded("max-compositions", limits.max_compositions, enumerated);
    }

    std::optional<Divisor> best;
    Divisor e = Divisor::zero(g.vertex_count());
    auto visit = [&](const Divisor& candidate) {
      if (best && !(candidate < *best)) return;
      if (q_reduce(g, candidate, kCanonicalBase).divisor == target) best = candidate;
    };
    for_each_composition(std::span(extra), spare, [&](std::span<std::int64_t> ex) {
      for (std::size_t i = 0; i < rows; ++i) row_sums[i] = floor_chips + ex[i];
      for_each_with_row_sums(e, grid, row_sums, 0, visit);
      return true;
    });
    if (best) return *best;
  }
  throw std::logic_error("no effective divisor found in a class with an effective member");
}

}  // namespace chipfire
