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

#include "fixtures.hpp"

#include <array>
#include <utility>

namespace chipfire::fixture {

Graph ladder_graph() {
  const std::array<std::pair<VertexId, VertexId>, 8> edges{{
      {L, B1}, {L, T1}, {B1, T1}, {B1, B2}, {T1, T2}, {B2, T2}, {B2, R}, {T2, R},
  }};
  return Graph::from_edges(6, edges);
}

Divisor ladder_debt_divisor() { return Divisor({2, -1, -1, 0, 0, 2}); }

Divisor ladder_effective_divisor() { return Divisor({0, 0, 0, 1, 1, 0}); }

}  // namespace chipfire::fixture
