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

#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace chipfire::oracle {

bool queen_adjacent(int m, int n, bool toroidal, VertexId u, VertexId v) {
  if (u == v) return false;
  const int x1 = u % m, y1 = u / m, x2 = v % m, y2 = v / m;
  if (x1 == x2 || y1 == y2) return true;
  if (!toroidal) return std::abs(x1 - x2) == std::abs(y1 - y2);
  for (int k = 1; k <= m * n; ++k) {
    const bool x_match = (x1 + k) % m == x2;
    if (x_match && (y1 + k) % n == y2) return true;
    if (x_match && ((y1 - k) % n + n) % n == y2) return true;
  }
  return false;
}

std::vector<VertexId> naive_unburned(const Graph& g, const Divisor& d, VertexId q) {
  const int count = g.vertex_count();
  std::vector<bool> burned(static_cast<std::size_t>(count), false);
  burned[static_cast<std::size_t>(q)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < count; ++v) {
      if (burned[static_cast<std::size_t>(v)]) continue;
      std::int64_t burning = 0;
      for (VertexId w = 0; w < count; ++w)
        if (g.adjacent(v, w) && burned[static_cast<std::size_t>(w)]) ++burning;
      if (burning > d[v]) {
        burned[static_cast<std::size_t>(v)] = true;
        changed = true;
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < count; ++v)
    if (!burned[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

bool legal_mask(const Graph& g, const Divisor& d, std::uint64_t u_mask) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (((u_mask >> v) & 1) == 0) continue;
    std::int64_t outflow = 0;
    for (VertexId w : g.neighbors(v))
      if (((u_mask >> w) & 1) == 0) ++outflow;
    if (d[v] < outflow) return false;
  }
  return true;
}

bool reduced_by_definition(const Graph& g, const Divisor& d, VertexId q) {
  const int count = g.vertex_count();
  if (count > 20) throw std::invalid_argument("reduced_by_definition: graph too large");
  for (VertexId v = 0; v < count; ++v)
    if (v != q && d[v] < 0) return false;
  const std::uint64_t all = (std::uint64_t{1} << count) - 1;
  const std::uint64_t allowed = all & ~(std::uint64_t{1} << q);
  for (std::uint64_t mask = allowed; mask != 0; mask = (mask - 1) & allowed) {
    if (legal_mask(g, d, mask)) return false;
  }
  return true;
}

bool in_laplacian_image(const Graph& g, const Divisor& diff) {
  using boost::multiprecision::cpp_rational;
  std::int64_t sum = 0;
  for (auto x : diff.values) sum += x;
  if (sum != 0) return false;
  // Solve L0 x = b, L0 the Laplacian with vertex 0's row and column removed.
  const int size = g.vertex_count() - 1;
  if (size == 0) return true;
  std::vector<std::vector<cpp_rational>> a(static_cast<std::size_t>(size),
                                           std::vector<cpp_rational>(static_cast<std::size_t>(size) + 1));
  for (int i = 0; i < size; ++i) {
    const VertexId v = i + 1;
    auto& row = a[static_cast<std::size_t>(i)];
    row[static_cast<std::size_t>(i)] = static_cast<long long>(g.neighbors(v).size());
    for (VertexId w : g.neighbors(v))
      if (w != 0) row[static_cast<std::size_t>(w - 1)] = -1;
    row[static_cast<std::size_t>(size)] = diff[v];
  }
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
    const auto& prow = a[static_cast<std::size_t>(col)];
    for (int r = 0; r < size; ++r) {
      if (r == col) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      const cpp_rational factor = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = col; c <= size; ++c) row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
    }
  }
  for (int i = 0; i < size; ++i) {
    const cpp_rational x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(size)] /
                           a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  return true;
}

std::vector<Divisor> all_effective(int vertex_count, std::int64_t total) {
  std::vector<Divisor> out;
  std::vector<std::int64_t> current(static_cast<std::size_t>(vertex_count), 0);
  std::function<void(int, std::int64_t)> place = [&](int v, std::int64_t left) {
    if (v == vertex_count - 1) {
      current[static_cast<std::size_t>(v)] = left;
      out.emplace_back(current);
      return;
    }
    for (std::int64_t c = left; c >= 0; --c) {
      current[static_cast<std::size_t>(v)] = c;
      place(v + 1, left - c);
    }
  };
  if (total >= 0) place(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Divisor> effective_equivalents(const Graph& g, const Divisor& d) {
  std::int64_t total = 0;
  for (auto x : d.values) total += x;
  std::vector<Divisor> out;
  for (auto& e : all_effective(g.vertex_count(), total))
    if (in_laplacian_image(g, e - d)) out.push_back(e);
  return out;
}

PlainMis plain_max_independent_sets(const Graph& g) {
  PlainMis result;
  std::vector<VertexId> chosen;
  const int count = g.vertex_count();
  std::function<void(VertexId)> go = [&](VertexId v) {
    if (v == count) {
      const int size = static_cast<int>(chosen.size());
      if (size > result.alpha) {
        result.alpha = size;
        result.sets.clear();
      }
      if (size == result.alpha) result.sets.push_back(chosen);
      return;
    }
    // Remaining vertices cannot lift the set past the current best.
    if (static_cast<int>(chosen.size()) + (count - v) < result.alpha) return;
    const bool free = std::none_of(chosen.begin(), chosen.end(), [&](VertexId u) { return g.adjacent(u, v); });
    if (free) {
      chosen.push_back(v);
      go(v + 1);
      chosen.pop_back();
    }
    go(v + 1);
  };
  go(0);
  std::sort(result.sets.begin(), result.sets.end());
  return result;
}

int n_queens_count(int n) {
  std::vector<int> cols;
  std::function<int(int)> place = [&](int row) -> int {
    if (row == n) return 1;
    int total = 0;
    for (int c = 0; c < n; ++c) {
      bool ok = true;
      for (int r = 0; r < row; ++r) {
        const int pc = cols[static_cast<std::size_t>(r)];
        if (pc == c || std::abs(pc - c) == row - r) ok = false;
      }
      if (!ok) continue;
      cols.push_back(c);
      total += place(row + 1);
      cols.pop_back();
    }
    return total;
  };
  return place(0);
}

}  // namespace chipfire::oracle
