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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles/gf2_bruteforce.hpp"
#include "parity/constraint_basis.hpp"
#include "parity/errors.hpp"
#include "parity/oracle.hpp"
#include "test_support.hpp"

using namespace parity;
using std::numbers::pi;

TEST_CASE("constraint targets") {
  CHECK(assert_equiv(constraint_target(std::vector<std::size_t>{0}, 1, 0.0), DenseUnitary(1))
            .equivalent);

  const DenseUnitary one = constraint_target(std::vector<std::size_t>{0}, 1, 0.3);
  CHECK(std::abs(one.at(0, 0) - std::polar(1.0, 0.3)) < 1e-12);
  CHECK(std::abs(one.at(1, 1) - std::polar(1.0, -0.3)) < 1e-12);

  // Two qubits at pi/4: phase +pi/4 on even parity, -pi/4 on odd parity.
  const DenseUnitary two = constraint_target(std::vector<std::size_t>{0, 1}, 2, pi / 4);
  for (std::size_t x = 0; x < 4; ++x) {
    const int parity = __builtin_popcount(static_cast<unsigned>(x)) % 2;
    const double phase = parity ? -pi / 4 : pi / 4;
    CHECK(std::abs(two.at(x, x) - std::polar(1.0, phase)) < 1e-12);
  }

  const DenseUnitary neg = constraint_target(std::vector<std::size_t>{0}, 1, 0.3, -1);
  CHECK(std::abs(neg.at(0, 0) - std::polar(1.0, -0.3)) < 1e-12);
}

TEST_CASE("gate matrices") {
  DenseUnitary u(2);
  u.apply(Gate::cnot(0, 1));
  // Wire 0 is bit 0: |01> (index 1) maps to |11> (index 3).
  CHECK(std::abs(u.at(3, 1) - 1.0) < 1e-12);
  CHECK(std::abs(u.at(0, 0) - 1.0) < 1e-12);
  CHECK(u.is_unitary());

  DenseUnitary h(1);
  h.apply(Gate::h(0));
  CHECK(std::abs(h.at(1, 0) - std::sqrt(0.5)) < 1e-12);

  DenseUnitary x(1);
  x.apply(Gate::rx(0, pi));
  CHECK(std::abs(std::abs(x.at(1, 0)) - 1.0) < 1e-12);

  // exp(i t (XX + YY) / 2) mixes |01> and |10> only.
  DenseUnitary e(2);
  e.apply(Gate::exchange(0, 1, 0.4));
  CHECK(std::abs(e.at(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(e.at(3, 3) - 1.0) < 1e-12);
  CHECK(std::abs(e.at(1, 1) - std::cos(0.4)) < 1e-12);
  CHECK(std::abs(e.at(2, 1) - Amplitude(0, std::sin(0.4))) < 1e-12);
}

TEST_CASE("equivalence up to global phase") {
  std::mt19937_64 rng(51);
  Circuit c;
  for (int i = 0; i < 20; ++i) {
    c.add(Gate::rx(rng() % 3, 0.1 * i));
    c.add(Gate::cnot(i % 3, (i + 1) % 3));
  }
  const DenseUnitary u = circuit_unitary(c, 3);
  DenseUnitary shifted = u;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t col = 0; col < u.dim(); ++col) shifted.at(r, col) *= std::polar(1.0, pi / 7);
  }
  CHECK(assert_equiv(u, u).equivalent);
  CHECK(assert_equiv(u, shifted).equivalent);
  CHECK(assert_equiv(shifted, u).equivalent);

  DenseUnitary cx(2);
  cx.apply(Gate::cnot(0, 1));
  CHECK_FALSE(assert_equiv(cx, DenseUnitary(2)).equivalent);
  CHECK_FALSE(assert_equiv(DenseUnitary(2), cx).equivalent);
  CHECK_THROWS_AS(assert_equiv(DenseUnitary(1), DenseUnitary(2)), std::invalid_argument);
}

TEST_CASE("tolerance semantics") {
  Circuit a({Gate::rz(0, 0.5), Gate::cnot(0, 1)});
  Circuit b({Gate::rz(0, 0.5 + 1e-12), Gate::cnot(0, 1)});
  Circuit c({Gate::rz(0, 0.5 + 1e-6), Gate::cnot(0, 1)});
  CHECK(assert_equiv(circuit_unitary(a, 2), circuit_unitary(b, 2), 1e-9).equivalent);
  CHECK_FALSE(assert_equiv(circuit_unitary(a, 2), circuit_unitary(c, 2), 1e-9).equivalent);
}

TEST_CASE("qubit cap") {
  CHECK_NOTHROW(DenseUnitary(kMaxOracleQubits));
  CHECK_THROWS_AS(DenseUnitary(kMaxOracleQubits + 1), ResourceCapError);
}

TEST_CASE("code space of the six-term example") {
  const ParityMap map(testing_support::load("six_term.json"));
  ConstraintBasis basis;
  basis.constraints = {Constraint{{0, 1, 2, 3}, 1}, Constraint{{0, 3, 4, 5}, 1}};
  CHECK(check_code_space(map, basis).ok);

  ConstraintBasis corrupted = basis;
  corrupted.constraints[1].qubits = {0, 3, 4};
  CHECK_FALSE(check_code_space(map, corrupted).ok);

  ConstraintBasis flipped = basis;
  flipped.constraints[0].sign = -1;
  CHECK_FALSE(check_code_space(map, flipped).ok);

  ConstraintBasis short_basis = basis;
  short_basis.constraints.pop_back();
  CHECK_FALSE(check_code_space(map, short_basis).ok);
}

TEST_CASE("code space of the five-cycle with one ancilla") {
  ParityMap map(testing_support::problem_from_terms(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}));
  const QubitId a = map.add_ancilla({1, 4});
  ConstraintBasis basis;
  basis.constraints = {Constraint{{0, 1, 2, a}, 1}, Constraint{{3, 4, a}, 1}};
  basis.ancillas = {a};
  CHECK(check_code_space(map, basis).ok);
  CHECK(eliminate_ancillas(basis.constraints, map) == physical_target_space(map));
}

TEST_CASE("code space agrees with the exhaustive kernel") {
  std::mt19937_64 rng(52);
  int valid_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const HcboProblem p = testing_support::random_problem(rng, 4 + rng() % 3, 4 + rng() % 5);
    const ParityMap map(p);
    oracle::Columns cols;
    for (const auto& t : p.terms) {
      std::uint32_t m = 0;
      for (int s : t.spins) m |= 1U << (s - 1);
      cols.push_back(m);
    }
    const auto kernel = oracle::kernel_by_enumeration(cols);
    std::vector<std::uint32_t> kernel_list(kernel.begin(), kernel.end());

    // Half the bases are drawn from the kernel, the rest are arbitrary masks.
    ConstraintBasis basis;
    std::vector<std::uint32_t> rows;
    const std::size_t want = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                          std::log2(kernel.size())));
    for (std::size_t i = 0; i < want; ++i) {
      std::uint32_t m = trial % 2 ? kernel_list[rng() % kernel_list.size()]
                                  : static_cast<std::uint32_t>(rng() % (1U << cols.size()));
      if (m == 0) continue;
      rows.push_back(m);
      Constraint c;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if ((m >> k) & 1U) c.qubits.push_back(k);
      }
      basis.constraints.push_back(c);
    }
    bool expected = oracle::span_by_enumeration(rows) == kernel;
    for (auto r : rows) expected = expected && kernel.contains(r);
    if (kernel.size() == 1) expected = rows.empty();
    // Linearly dependent rows are not a basis.
    if (oracle::span_by_enumeration(rows).size() != (std::size_t{1} << rows.size())) {
      expected = false;
    }
    valid_seen += expected ? 1 : 0;
    INFO("trial " << trial);
    CHECK(check_code_space(map, basis).ok == expected);
  }
  CHECK(valid_seen > 10);
}
