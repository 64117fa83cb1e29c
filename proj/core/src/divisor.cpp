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

#include "chipfire/divisor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace chipfire {
namespace {

void check_divisor(const Graph& g, const Divisor& d) {
  if (d.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("divisor has " + std::to_string(d.size()) + " entries, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
}

void check_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("vertex set universe does not match graph");
  }
}

void check_vertex(const Graph& g, VertexId v) {
  if (!g.valid_vertex(v)) throw std::out_of_range("invalid vertex id " + std::to_string(v));
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Stage 1 of reduction: fire the distance balls around q, outermost first,
// until only q can be in debt.
void clear_debt_away_from(const Graph& g, Divisor& d, FiringScript& script, VertexId q) {
  const auto dist = bfs_distances(g, q);
  const int eccentricity = *std::max_element(dist.begin(), dist.end());
  const auto count = static_cast<std::size_t>(g.vertex_count());
  for (int k = eccentricity - 1; k >= 0; --k) {
    VertexSet ball(count);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (dist[static_cast<std::size_t>(v)] <= k) ball.insert(v);
    std::int64_t times = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (dist[static_cast<std::size_t>(v)] != k + 1 || d[v] >= 0) continue;
      const auto inflow = static_cast<std::int64_t>(g.neighbor_set(v).intersection_size(ball));
      times = std::max(times, ceil_div(-d[v], inflow));
    }
    if (times == 0) continue;
    d = fire_set_times(g, d, ball, times);
    ball.for_each([&](VertexId v) { script.fires[static_cast<std::size_t>(v)] += times; });
  }
}

}  // namespace

Divisor Divisor::zero(int vertex_count) {
  return Divisor(std::vector<std::int64_t>(static_cast<std::size_t>(vertex_count), 0));
}

Divisor Divisor::indicator(const VertexSet& s) {
  Divisor d(std::vector<std::int64_t>(s.universe(), 0));
  s.for_each([&](VertexId v) { d[v] = 1; });
  return d;
}

Divisor Divisor::unit(int vertex_count, VertexId v) {
  Divisor d = zero(vertex_count);
  d.values.at(static_cast<std::size_t>(v)) = 1;
  return d;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  if (other.size() != size()) throw std::invalid_argument("divisor length mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  if (other.size() != size()) throw std::invalid_argument("divisor length mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= other.values[i];
  return *this;
}

std::int64_t divisor_degree(const Divisor& d) noexcept {
  return std::accumulate(d.values.begin(), d.values.end(), std::int64_t{0});
}

bool is_effective(const Divisor& d) noexcept {
  return std::all_of(d.values.begin(), d.values.end(), [](std::int64_t x) { return x >= 0; });
}

Divisor fire_set_times(const Graph& g, const Divisor& d, const VertexSet& u_set, std::int64_t times) {
  check_divisor(g, d);
  check_set(g, u_set);
  Divisor out = d;
  if (times == 0) return out;
  u_set.for_each([&](VertexId v) {
    for (VertexId w : g.neighbors(v)) {
      if (u_set.contains(w)) continue;
      out[v] -= times;
      out[w] += times;
    }
  });
  return out;
}

Divisor fire_set(const Graph& g, const Divisor& d, const VertexSet& u_set) {
  return fire_set_times(g, d, u_set, 1);
}

bool is_legal_firing(const Graph& g, const Divisor& d, const VertexSet& u_set) {
  check_divisor(g, d);
  check_set(g, u_set);
  bool legal = true;
  u_set.for_each([&](VertexId v) {
    const auto outflow = static_cast<std::int64_t>(g.neighbors(v).size() -
                                                   g.neighbor_set(v).intersection_size(u_set));
    if (d[v] < 0 || d[v] - outflow < 0) legal = false;
  });
  return legal;
}

Divisor apply_script(const Graph& g, const Divisor& d, const FiringScript& script) {
  check_divisor(g, d);
  if (script.fires.size() != d.size()) throw std::invalid_argument("script length mismatch");
  Divisor out = d;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::int64_t f = script.fires[static_cast<std::size_t>(v)];
    if (f == 0) continue;
    out[v] -= f * static_cast<std::int64_t>(g.neighbors(v).size());
    for (VertexId w : g.neighbors(v)) out[w] += f;
  }
  return out;
}

FiringScript normalize_script(FiringScript script) {
  if (script.fires.empty()) return script;
  const std::int64_t low = *std::min_element(script.fires.begin(), script.fires.end());
  for (auto& f : script.fires) f -= low;
  return script;
}

BurnReport dhar_burn(const Graph& g, const Divisor& d, VertexId q) {
  check_divisor(g, d);
  check_vertex(g, q);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != q && d[v] < 0) {
      throw std::invalid_argument("burning test needs d(v) >= 0 away from q; vertex " + std::to_string(v) +
                                  " has " + std::to_string(d[v]));
    }
  }
  const auto count = static_cast<std::size_t>(g.vertex_count());
  BurnReport report;
  report.burned_order.reserve(count);
  std::vector<std::int64_t> burning_edges(count, 0);
  VertexSet burned(count);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> pending;

  burned.insert(q);
  report.burned_order.push_back(q);
  pending.push(q);
  while (!pending.empty()) {
    const VertexId v = pending.top();
    pending.pop();
    for (VertexId w : g.neighbors(v)) {
      if (burned.contains(w)) continue;
      if (++burning_edges[static_cast<std::size_t>(w)] > d[w]) {
        burned.insert(w);
        report.burned_order.push_back(w);
        pending.push(w);
      }
    }
  }
  report.unburned = burned.complement();
  return report;
}

bool is_q_reduced(const Graph& g, const Divisor& d, VertexId q) {
  check_divisor(g, d);
  check_vertex(g, q);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != q && d[v] < 0) return false;
  return dhar_burn(g, d, q).fully_burned();
}

Reduction q_reduce(const Graph& g, const Divisor& d, VertexId q) {
  check_divisor(g, d);
  check_vertex(g, q);
  Reduction result{d, FiringScript{std::vector<std::int64_t>(d.size(), 0)}};
  clear_debt_away_from(g, result.divisor, result.script, q);

  // Stage 2: the unburned set is a legal firing; fire it as many times as
  // stays legal, then burn again.
  while (true) {
    const BurnReport burn = dhar_burn(g, result.divisor, q);
    if (burn.fully_burned()) break;
    const VertexSet& u = burn.unburned;
    std::int64_t times = -1;
    u.for_each([&](VertexId v) {
      const auto outflow = static_cast<std::int64_t>(g.neighbors(v).size() - g.neighbor_set(v).intersection_size(u));
      if (outflow == 0) return;
      const std::int64_t allowed = result.divisor[v] / outflow;
      times = times < 0 ? allowed : std::min(times, allowed);
    });
    if (times < 1) throw std::logic_error("unburned set is not a legal firing");
    result.divisor = fire_set_times(g, result.divisor, u, times);
    u.for_each([&](VertexId v) { result.script.fires[static_cast<std::size_t>(v)] += times; });
  }
  result.script = normalize_script(std::move(result.script));
  return result;
}

bool equivalent(const Graph& g, const Divisor& d1, const Divisor& d2) {
  check_divisor(g, d1);
  check_divisor(g, d2);
  if (divisor_degree(d1) != divisor_degree(d2)) return false;
  return q_reduce(g, d1, kCanonicalBase).divisor == q_reduce(g, d2, kCanonicalBase).divisor;
}

}  // namespace chipfire
