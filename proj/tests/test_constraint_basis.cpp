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

#include <algorithm>
#include <random>

#include "oracles/gf2_bruteforce.hpp"
#include "parity/constraint_basis.hpp"
#include "parity/errors.hpp"
#include "test_support.hpp"

using namespace parity;
using testing_support::problem_from_terms;

namespace {

HcboProblem cycle(int n) {
  std::vector<SpinSet> terms;
  for (int i = 1; i < n; ++i) terms.push_back({i, i + 1});
  terms.push_back({1, n});
  return problem_from_terms(n, terms);
}

std::vector<std::size_t> lengths(const std::vector<Constraint>& cs) {
  std::vector<std::size_t> out;
  for (const auto& c : cs) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("valid constraints of the six-term example") {
  const ParityMap map(testing_support::load("six_term.json"));
  // Terms: 0=12 1=15 2=24 3=45 4=123 5=345.
  CHECK(is_valid_constraint(std::vector<QubitId>{1, 2, 4, 5}, map));
  CHECK(is_valid_constraint(std::vector<QubitId>{0, 1, 2, 3}, map));
  CHECK_FALSE(is_valid_constraint(std::vector<QubitId>{0, 1, 2}, map));
  CHECK_THROWS_AS(is_valid_constraint(std::vector<QubitId>{0, 9}, map), std::invalid_argument);
  CHECK_THROWS_AS(is_valid_constraint(std::vector<QubitId>{0, 0}, map), std::invalid_argument);
}

TEST_CASE("short constraints of the six-term example span the target space") {
  ParityMap map(testing_support::load("six_term.json"));
  const auto shorts = enumerate_short_constraints(map, 4);
  for (const auto& c : shorts) {
    CHECK(c.size() <= 4);
    CHECK(is_valid_constraint(c.qubits, map));
  }
  const auto growth = grow_short_basis(physical_target_space(map), shorts);
  CHECK(growth.basis.size() == 2);
  CHECK(growth.uncovered.rows() == 0);

  const ConstraintBasis basis = build_constraint_basis(map);
  CHECK(basis.ancillas.empty());
  CHECK(lengths(basis.constraints) == std::vector<std::size_t>{4, 4});
  CHECK(eliminate_ancillas(basis.constraints, map) == physical_target_space(map));
}

TEST_CASE("enumeration is complete for short lengths") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const HcboProblem p = testing_support::random_problem(rng, 5, 4 + rng() % 5);
    const ParityMap map(p);
    oracle::Columns cols;
    for (const auto& t : p.terms) {
      std::uint32_t m = 0;
      for (int s : t.spins) m |= 1U << (s - 1);
      cols.push_back(m);
    }
    std::size_t expected = 0;
    for (std::uint32_t x : oracle::kernel_by_enumeration(cols)) {
      const int len = __builtin_popcount(x);
      if (len >= 1 && len <= 3) ++expected;
    }
    CHECK(enumerate_short_constraints(map, 3).size() == expected);
  }
}

TEST_CASE("five-cycle needs one ancilla") {
  ParityMap map(cycle(5));
  const BitMatrix original = physical_target_space(map);
  CHECK(original.rows() == 1);
  CHECK(original.row(0).popcount() == 5);

  const ConstraintBasis basis = build_constraint_basis(map, 4);
  CHECK(basis.ancillas.size() == 1);
  CHECK(lengths(basis.constraints) == std::vector<std::size_t>{3, 4});
  CHECK(map.num_ancillas() == 1);
  const QubitId a = basis.ancillas.front();
  for (const auto& c : basis.constraints) CHECK(c.contains(a));
  CHECK(eliminate_ancillas(basis.constraints, map) == original);
}

TEST_CASE("long constraints are split into chains") {
  SECTION("length five, max four") {
    ParityMap map(cycle(5));
    const auto chain = break_long_constraint(Constraint{{0, 1, 2, 3, 4}, 1}, 4, map);
    CHECK(chain.ancillas.size() == 1);
    CHECK(lengths(chain.constraints) == std::vector<std::size_t>{3, 4});
    CHECK(eliminate_ancillas(chain.constraints, map) == physical_target_space(map));
  }
  SECTION("length seven, max three") {
    ParityMap map(cycle(7));
    const auto chain = break_long_constraint(Constraint{{0, 1, 2, 3, 4, 5, 6}, 1}, 3, map);
    CHECK(chain.constraints.size() == 5);
    CHECK(chain.ancillas.size() == 4);
    for (const auto& c : chain.constraints) CHECK(c.size() <= 3);
    for (const auto& c : chain.constraints) CHECK(is_valid_constraint(c.qubits, map));
    CHECK(eliminate_ancillas(chain.constraints, map) == physical_target_space(map));
  }
  SECTION("already short") {
    ParityMap map(cycle(4));
    const auto chain = break_long_constraint(Constraint{{0, 1, 2, 3}, 1}, 4, map);
    CHECK(chain.constraints.size() == 1);
    CHECK(chain.ancillas.empty());
  }
}

TEST_CASE("ancilla labels are the parity they are forced to") {
  ParityMap map(cycle(6));
  const auto chain = break_long_constraint(Constraint{{0, 1, 2, 3, 4, 5}, 1}, 4, map);
  REQUIRE(chain.ancillas.size() == 1);
  // First chunk holds terms 12, 23, 34, so the ancilla carries spins 1 and 4.
  CHECK(map.qubit(chain.ancillas.front()).label == SpinSet{1, 4});
}

TEST_CASE("product constraints shorten the basis") {
  HcboProblem p = problem_from_terms(3, {{1, 2}, {2, 3}});
  p.product_constraints = {{{1, 3}, -1}};
  ParityMap map(p);
  const ConstraintBasis basis = build_constraint_basis(map);
  REQUIRE(basis.constraints.size() == 1);
  CHECK(basis.constraints[0].qubits == std::vector<QubitId>{0, 1});
  CHECK(basis.constraints[0].sign == -1);
}

TEST_CASE("four-spin example basis") {
  ParityMap map(testing_support::load("four_spin.json"));
  const ConstraintBasis basis = build_constraint_basis(map);
  CHECK(basis.constraints.size() == 4);
  CHECK(basis.ancillas.empty());
  CHECK(lengths(basis.constraints) == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(eliminate_ancillas(basis.constraints, map) == physical_target_space(map));
}

TEST_CASE("problems without cycles have an empty basis") {
  ParityMap map(problem_from_terms(4, {{1, 2}, {2, 3}, {3, 4}}));
  const ConstraintBasis basis = build_constraint_basis(map);
  CHECK(basis.constraints.empty());
  CHECK(physical_target_space(map).rows() == 0);
}
