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

#include "chipfire/independence.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace chipfire {

bool is_independent(const Graph& g, std::span<const VertexId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.valid_vertex(s[i])) throw std::out_of_range("invalid vertex id " + std::to_string(s[i]));
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](VertexId v) { ok = ok && !g.neighbor_set(v).intersects(s); });
  return ok;
}

std::vector<std::vector<VertexId>> clique_cover(const Graph& g) {
  std::vector<std::vector<VertexId>> cover;
  if (const auto& grid = g.grid()) {
    if (grid->n <= grid->m) {
      for (int i = 0; i < grid->n; ++i) cover.push_back(row_vertices(g, i));
    } else {
      for (int j = 0; j < grid->m; ++j) cover.push_back(column_vertices(g, j));
    }
    return cover;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto fits = [&](const std::vector<VertexId>& clique) {
      return std::all_of(clique.begin(), clique.end(), [&](VertexId u) { return g.adjacent(u, v); });
    };
    auto it = std::find_if(cover.begin(), cover.end(), fits);
    if (it == cover.end()) {
      cover.push_back({v});
    } else {
      it->push_back(v);
    }
  }
  return cover;
}

namespace {

// Each clique contributes at most one vertex, so a set is reached by exactly
// one path of the search. Ties with the best size are kept.
class MisSearch {
 public:
  MisSearch(const Graph& g, std::vector<std::vector<VertexId>> cover, std::atomic<int>& global_best)
      : g_(g), cover_(std::move(cover)), global_best_(global_best) {}

  void run_from(std::size_t clique, VertexSet blocked, std::vector<VertexId> chosen) {
    chosen_ = std::move(chosen);
    search(clique, blocked);
  }

  int best() const { return best_; }
  std::vector<IndependentSet> take_results() { return std::move(results_); }

 private:
  int available_cliques(std::size_t from, const VertexSet& blocked) const {
    int total = 0;
    for (std::size_t c = from; c < cover_.size(); ++c) {
      for (VertexId v : cover_[c]) {
        if (!blocked.contains(v)) {
          ++total;
          break;
        }
      }
    }
    return total;
  }

  void search(std::size_t clique, const VertexSet& blocked) {
    const int size = static_cast<int>(chosen_.size());
    if (size + available_cliques(clique, blocked) < global_best_.load(std::memory_order_relaxed)) return;
    if (clique == cover_.size()) {
      record();
      return;
    }
    for (VertexId v : cover_[clique]) {
      if (blocked.contains(v)) continue;
      VertexSet next = blocked | g_.neighbor_set(v);
      next.insert(v);
      chosen_.push_back(v);
      search(clique + 1, next);
      chosen_.pop_back();
    }
    search(clique + 1, blocked);
  }

  void record() {
    const int size = static_cast<int>(chosen_.size());
    if (size < best_) return;
    if (size > best_) {
      best_ = size;
      results_.clear();
      int seen = global_best_.load();
      while (seen < size && !global_best_.compare_exchange_weak(seen, size)) {
      }
    }
    IndependentSet s{chosen_};
    std::sort(s.vertices.begin(), s.vertices.end());
    results_.push_back(std::move(s));
  }

  const Graph& g_;
  std::vector<std::vector<VertexId>> cover_;
  std::atomic<int>& global_best_;
  std::vector<VertexId> chosen_;
  int best_ = -1;
  std::vector<IndependentSet> results_;
};

}  // namespace

MaxIndependentSets max_independent_sets(const Graph& g, const SearchLimits& limits) {
  if (static_cast<std::uint32_t>(g.vertex_count()) > limits.max_mis_vertices) {
    throw CapExceeded("max-mis-vertices", limits.max_mis_vertices, static_cast<std::uint64_t>(g.vertex_count()));
  }
  const auto cover = clique_cover(g);
  const auto count = static_cast<std::size_t>(g.vertex_count());

  // Branches: each vertex of the first clique, then skipping it.
  const auto& first = cover.front();
  std::atomic<int> global_best{0};
  std::vector<int> branch_best(first.size() + 1, -1);
  std::vector<std::vector<IndependentSet>> branch_sets(first.size() + 1);
  detail::parallel_for(first.size() + 1, limits.threads, [&](std::size_t b) {
    MisSearch search(g, cover, global_best);
    if (b < first.size()) {
      const VertexId v = first[b];
      VertexSet blocked = g.neighbor_set(v);
      blocked.insert(v);
      search.run_from(1, blocked, {v});
    } else {
      search.run_from(1, VertexSet(count), {});
    }
    branch_best[b] = search.best();
    branch_sets[b] = search.take_results();
  });

  MaxIndependentSets out;
  out.alpha = *std::max_element(branch_best.begin(), branch_best.end());
  for (std::size_t b = 0; b < branch_sets.size(); ++b) {
    if (branch_best[b] != out.alpha) continue;
    for (auto& s : branch_sets[b]) out.sets.push_back(std::move(s));
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

namespace {

std::pair<int, int> normalized(int m, int n) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("board must be at least 2x2, got " + std::to_string(m) + "x" + std::to_string(n));
  }
  return {std::max(m, n), std::min(m, n)};
}

}  // namespace

int queen_alpha_formula(int m, int n) {
  const auto [big, small] = normalized(m, n);
  if (big == 2 && small == 2) return 1;
  if (big == 3 && small == 3) return 2;
  return small;
}

int toroidal_alpha_formula(int m, int n) {
  const auto [big, small] = normalized(m, n);
  if (big != small) return std::gcd(big, small);
  const int side = big;
  if (std::gcd(6, side) == 1) return side;
  if (side % 3 != 0 && side % 4 != 0) return side - 1;
  return side - 2;
}

}  // namespace chipfire
