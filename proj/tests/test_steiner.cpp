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

#include <random>

#include "oracles/steiner_exact.hpp"
#include "parity/steiner.hpp"
#include "test_support.hpp"

using namespace parity;

namespace {

std::vector<NodeId> distinct_nodes(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<NodeId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

int hanan_size(const DeviceGraph& g, const std::vector<NodeId>& terminals) {
  std::vector<oracle::Point> pts;
  for (NodeId t : terminals) pts.push_back({g.coord(t)->x, g.coord(t)->y});
  return oracle::hanan_exact(pts);
}

}  // namespace

TEST_CASE("trivial terminal sets") {
  const DeviceGraph g = DeviceGraph::grid(3, 3);
  const std::vector<NodeId> one{4};
  const SteinerTree t = steiner_tree(g, one);
  CHECK(t.size() == 0);
  CHECK(t.nodes == std::vector<NodeId>{4});
  const std::vector<NodeId> pair{0, 8};
  CHECK(steiner_tree(g, pair).size() == 4);
}

TEST_CASE("three-terminal rectilinear trees meet the exact size") {
  const DeviceGraph g = DeviceGraph::grid(6, 5);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto terms = distinct_nodes(rng, g.size(), 3);
    const auto tree = rect_steiner_3(g, terms);
    REQUIRE(tree.has_value());
    CHECK(is_valid_steiner_tree(*tree, g));
    int xmin = 99, xmax = -1, ymin = 99, ymax = -1;
    for (NodeId t : terms) {
      xmin = std::min(xmin, g.coord(t)->x);
      xmax = std::max(xmax, g.coord(t)->x);
      ymin = std::min(ymin, g.coord(t)->y);
      ymax = std::max(ymax, g.coord(t)->y);
    }
    CHECK(static_cast<int>(tree->size()) == (xmax - xmin) + (ymax - ymin));
  }
  const std::vector<NodeId> two{0, 1};
  CHECK_THROWS_AS(rect_steiner_3(g, two), std::invalid_argument);
}

TEST_CASE("four-terminal rectilinear trees match the Hanan optimum") {
  const DeviceGraph g = DeviceGraph::grid(7, 6);
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto terms = distinct_nodes(rng, g.size(), 4);
    const auto tree = rect_steiner_4(g, terms);
    REQUIRE(tree.has_value());
    CHECK(is_valid_steiner_tree(*tree, g));
    CHECK(static_cast<int>(tree->size()) == hanan_size(g, terms));
  }
}

TEST_CASE("rectilinear constructions need coordinates") {
  const DeviceGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<NodeId> terms{0, 2, 3};
  CHECK_FALSE(rect_steiner_3(g, terms).has_value());
  CHECK(steiner_tree(g, terms).size() == 3);
}

TEST_CASE("rectilinear constructions refuse routes through missing nodes") {
  // 3x3 grid without the centre node.
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 4}, {4, 7}, {7, 6}, {6, 5}, {5, 3}, {3, 0}};
  std::vector<std::optional<Coord>> coords{Coord{0, 0}, Coord{1, 0}, Coord{2, 0}, Coord{0, 1},
                                           Coord{2, 1}, Coord{0, 2}, Coord{1, 2}, Coord{2, 2}};
  const DeviceGraph ring(8, edges, coords);
  const std::vector<NodeId> terms{1, 3, 6};
  const SteinerTree t = steiner_tree(ring, terms);
  CHECK(is_valid_steiner_tree(t, ring));
  CHECK(static_cast<int>(t.size()) ==
        oracle::dreyfus_wagner(testing_support::adjacency(ring), {1, 3, 6}));
}

TEST_CASE("general trees are valid and near the exact optimum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 6 + rng() % 12;
    const DeviceGraph g = testing_support::random_connected(rng, n, rng() % n);
    const std::size_t k = 2 + rng() % std::min<std::size_t>(4, n - 2);
    const auto terms = distinct_nodes(rng, n, k);
    const SteinerTree t = steiner_tree(g, terms);
    CHECK(is_valid_steiner_tree(t, g));
    const int exact = oracle::dreyfus_wagner(testing_support::adjacency(g), terms);
    CHECK(static_cast<int>(t.size()) >= exact);
    // Metric-closure construction is within a factor 2(1 - 1/k).
    CHECK(static_cast<double>(t.size()) <= 2.0 * (1.0 - 1.0 / k) * exact + 1e-9);
  }
}

TEST_CASE("tree queries and ordering") {
  const DeviceGraph g = DeviceGraph::chain(5);
  const std::vector<NodeId> terms{0, 4};
  const SteinerTree t = steiner_tree(g, terms);
  CHECK(t.contains(2));
  CHECK_FALSE(t.is_terminal(2));
  CHECK(t.neighbors(2) == std::vector<NodeId>{1, 3});
  CHECK(terminal_span(t) == 4);

  SteinerTree broken = t;
  broken.edges.pop_back();
  CHECK_FALSE(is_valid_steiner_tree(broken, g));
  CHECK_FALSE(better_tree(t, t));
}
