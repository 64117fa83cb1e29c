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

#include <doctest.h>

#include <stdexcept>

#include <string>

#include "chipfire/io.hpp"

using namespace chipfire;

TEST_CASE("graph JSON export") {
  const std::string json = graph_to_json(queen_graph(2, 2));
  CHECK(json == "{\"m\":2,\"n\":2,\"toroidal\":false,\"edges\":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}\n");
}

TEST_CASE("graph JSON round trip") {
  for (const Graph& g : {queen_graph(4, 3), toroidal_queen_graph(4, 4), complete_graph(5)}) {
    const Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.edges() == g.edges());
    CHECK(back.grid() == g.grid());
  }
  CHECK_THROWS_AS(graph_from_json("{\"m\":2,\"n\":2,\"toroidal\":false,\"edges\":[[0,1]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
}

TEST_CASE("DOT export") {
  const std::string dot = graph_to_dot(queen_graph(2, 2));
  CHECK(dot.find("0 [label=\"c0r0\"]") != std::string::npos);
  CHECK(dot.find("3 [label=\"c1r1\"]") != std::string::npos);
  CHECK(dot.find("0 -- 1 [kind=\"row\"]") != std::string::npos);
  CHECK(dot.find("0 -- 2 [kind=\"col\"]") != std::string::npos);
  CHECK(dot.find("0 -- 3 [kind=\"dp\"]") != std::string::npos);
  CHECK(dot.find("1 -- 2 [kind=\"dn\"]") != std::string::npos);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 4);
  CHECK(edges == 6);

  // Row wins over the wrapped diagonal on the 2x2 torus.
  const std::string torus = graph_to_dot(toroidal_queen_graph(2, 2));
  CHECK(torus.find("0 -- 1 [kind=\"row\"]") != std::string::npos);
}

TEST_CASE("divisor parsing") {
  CHECK(parse_divisor("3,0,-1,2").values == std::vector<std::int64_t>{3, 0, -1, 2});
  CHECK(parse_divisor(" 1, 2 ,3\n").values == std::vector<std::int64_t>{1, 2, 3});
  CHECK(parse_divisor("{\"values\":[4,-2]}").values == std::vector<std::int64_t>{4, -2});
  CHECK(parse_divisor(divisor_to_json(Divisor({5, 6}))) == Divisor({5, 6}));
  CHECK_THROWS_AS(parse_divisor("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divisor("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divisor(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_divisor("{\"vals\":[1]}"), std::invalid_argument);
}

TEST_CASE("burn trace text") {
  BurnReport report;
  report.burned_order = {2, 0};
  report.unburned = VertexSet(4, {1, 3});
  CHECK(burn_trace_text(report) == "2\n0\nUNBURNED: 1 3\n");
  report.unburned = VertexSet(4);
  CHECK(burn_trace_text(report) == "2\n0\nUNBURNED:\n");
}
