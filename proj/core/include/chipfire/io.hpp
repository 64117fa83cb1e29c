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

#include <string>
#include <string_view>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

/// {"m":..,"n":..,"toroidal":..,"edges":[[u,v],...]}; non-grid graphs carry
/// "vertex_count" and null geometry.
std::string graph_to_json(const Graph& g);

/// Accepts graph_to_json output. Grid graphs are regenerated from (m, n,
/// toroidal) and must match the listed edges exactly.
Graph graph_from_json(std::string_view text);

/// Graphviz export with "c{x}r{y}" labels and a kind attribute per edge.
std::string graph_to_dot(const Graph& g);

/// {"values":[...]}
std::string divisor_to_json(const Divisor& d);

/// Inline "v0,v1,..." or a JSON object with a "values" array.
Divisor parse_divisor(std::string_view text);

/// One burned vertex per line, then "UNBURNED: ..." (space separated).
std::string burn_trace_text(const BurnReport& report);

}  // namespace chipfire
