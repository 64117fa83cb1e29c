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

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire::fixture {

// Six-vertex "ladder" with two triangle ends:
//   L - B1 - B2 - R
//   L - T1 - T2 - R,  B1 - T1,  B2 - T2
enum : VertexId { L = 0, B1 = 1, T1 = 2, B2 = 3, T2 = 4, R = 5 };

Graph ladder_graph();

/// (L:2, B1:-1, T1:-1, R:2)
Divisor ladder_debt_divisor();

/// (B2:1, T2:1)
Divisor ladder_effective_divisor();

}  // namespace chipfire::fixture
