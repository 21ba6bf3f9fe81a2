// Copyright 2026 The parityc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch2/catch_amalgamated.hpp>

#include "parity/device.hpp"
#include "parity/errors.hpp"

using namespace parity;

TEST_CASE("chain and grid generators") {
  const DeviceGraph c = DeviceGraph::chain(5);
  CHECK(c.size() == 5);
  CHECK(c.edges().size() == 4);
  CHECK(c.distance(0, 4) == 4);
  CHECK(c.coord(3)->x == 3);

  const DeviceGraph g = DeviceGraph::grid(4, 3);
  CHECK(g.size() == 12);
  CHECK(g.edges().size() == 3 * 3 + 4 * 2);
  CHECK(g.node_at({2, 1}) == 6);
  CHECK_FALSE(g.node_at({4, 0}).has_value());
  CHECK(g.distance(0, 11) == 5);
  CHECK(g.has_edge(5, 6));
  CHECK(g.has_edge(6, 5));
  CHECK_FALSE(g.has_edge(0, 5));
  CHECK(g.fully_embedded());
}

TEST_CASE("shortest paths break ties toward smaller nodes") {
  const DeviceGraph g = DeviceGraph::grid(3, 3);
  CHECK(g.shortest_path(0, 8) == std::vector<NodeId>{0, 1, 2, 5, 8});
  CHECK(g.shortest_path(4, 4) == std::vector<NodeId>{4});
}

TEST_CASE("device construction errors") {
  CHECK_THROWS_AS(DeviceGraph(3, {{0, 1}}), DisconnectedDeviceError);
  CHECK_THROWS_AS(DeviceGraph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(DeviceGraph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(DeviceGraph(0, {}), InputError);
  CHECK_THROWS_AS(DeviceGraph(2, {{0, 1}}, {Coord{0, 0}, Coord{0, 0}}), InputError);
}

TEST_CASE("device json round trip keeps external ids") {
  const auto doc = nlohmann::json::parse(R"({
    "name": "tee",
    "nodes": [{"id": 10, "x": 0, "y": 0}, {"id": 20, "x": 1, "y": 0},
              {"id": 30, "x": 2, "y": 0}, {"id": 40, "x": 1, "y": 1}],
    "edges": [[10, 20], [20, 30], [20, 40]]})");
  const DeviceGraph g = device_from_json(doc);
  CHECK(g.size() == 4);
  CHECK(g.label(3) == 40);
  CHECK(g.has_edge(1, 3));
  CHECK(g.name() == "tee");
  CHECK(device_to_json(device_from_json(device_to_json(g))) == device_to_json(g));

  CHECK_THROWS_AS(device_from_json(nlohmann::json::parse(R"({"nodes": []})")), InputError);
  CHECK_THROWS_AS(
      device_from_json(nlohmann::json::parse(R"({"nodes": [{"id": 1, "x": 0}], "edges": []})")),
      InputError);
  CHECK_THROWS_AS(device_from_json(nlohmann::json::parse(
                      R"({"nodes": [{"id": 1}, {"id": 2}], "edges": [[1, 3]]})")),
                  InputError);
}

TEST_CASE("device specs") {
  CHECK(load_device("chain:3").size() == 3);
  CHECK(load_device("grid:2x5").size() == 10);
  CHECK_THROWS_AS(load_device("grid:2"), InputError);
  CHECK_THROWS_AS(load_device("chain:-1"), InputError);
  CHECK_THROWS_AS(load_device("/no/such/device.json"), InputError);
}

TEST_CASE("layout bookkeeping") {
  Layout l(3, 4);
  l.place(0, 2);
  l.place(1, 0);
  CHECK(l.occupant(2) == 0);
  CHECK(l.free_nodes() == std::vector<NodeId>{1, 3});
  CHECK_THROWS(l.place(2, 2));
  l.swap_qubits(0, 1);
  CHECK(l.node(0) == 0);
  CHECK(l.node(1) == 2);
  l.relocate(1, 3);
  CHECK(l.occupant(2) == std::nullopt);
  CHECK(l.node_checked(1) == 3);
  CHECK_THROWS(l.node_checked(2));
  l.resize_qubits(5);
  CHECK(l.num_qubits() == 5);
  l.unplace(0);
  CHECK_FALSE(l.node(0).has_value());
}
