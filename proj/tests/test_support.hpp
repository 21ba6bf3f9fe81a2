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


#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "parity/device.hpp"
#include "parity/problem.hpp"
#include "parity/problem_io.hpp"

namespace testing_support {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(PARITY_DATA_DIR) / name;
}

inline parity::HcboProblem load(const std::string& name) {
  return parity::load_problem(data_path(name));
}

/// Problem with the given spin sets as terms and unit coefficients.
inline parity::HcboProblem problem_from_terms(int n_spins,
                                              const std::vector<parity::SpinSet>& terms) {
  parity::HcboProblem p;
  p.n_spins = n_spins;
  for (const auto& t : terms) p.terms.push_back({t, 1.0});
  return p;
}

/// Random distinct terms of order 1..3 over n spins.
inline parity::HcboProblem random_problem(std::mt19937_64& rng, int n_spins,
                                          std::size_t n_terms) {
  std::vector<parity::SpinSet> terms;
  std::uniform_int_distribution<int> order(1, 3), spin(1, n_spins);
  while (terms.size() < n_terms) {
    std::vector<int> s;
    const int want = std::min(order(rng), n_spins);
    while (static_cast<int>(s.size()) < want) {
      const int v = spin(rng);
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    if (std::find(terms.begin(), terms.end(), s) == terms.end()) terms.push_back(s);
  }
  return problem_from_terms(n_spins, terms);
}

/// Random tree on n nodes: node i attaches to a uniformly chosen earlier node.
inline parity::DeviceGraph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<parity::Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i});
  }
  return parity::DeviceGraph(n, edges);
}

/// Random connected graph: a random tree plus extra random edges.
inline parity::DeviceGraph random_connected(std::mt19937_64& rng, std::size_t n,
                                            std::size_t extra) {
  std::vector<parity::Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i});
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(edges.begin(), edges.end(), parity::Edge{a, b}) == edges.end()) {
      edges.push_back({a, b});
    }
  }
  return parity::DeviceGraph(n, edges);
}

/// Adjacency lists in the form the exact Steiner oracle expects.
inline std::vector<std::vector<std::size_t>> adjacency(const parity::DeviceGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) adj[n] = g.neighbors(n);
  return adj;
}

}  // namespace testing_support
