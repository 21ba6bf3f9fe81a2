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

#include "oracles/gf2_bruteforce.hpp"
#include "parity/gf2.hpp"

using namespace parity;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
  }
  return m;
}

std::uint32_t mask_of(const BitVector& v) {
  std::uint32_t m = 0;
  for (auto i : v.indices()) m |= 1U << i;
  return m;
}

std::vector<std::uint32_t> row_masks(const BitMatrix& m) {
  std::vector<std::uint32_t> out;
  for (const auto& r : m.row_vectors()) out.push_back(mask_of(r));
  return out;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v(130);
  CHECK(v.none());
  v.set(0);
  v.set(129);
  CHECK(v.popcount() == 2);
  CHECK(v.first_set() == 0);
  CHECK(v.indices() == std::vector<std::size_t>{0, 129});
  v.flip(0);
  CHECK(v.first_set() == 129);
  CHECK(BitVector(7).first_set() == 7);
  CHECK(BitVector({1, 0, 1}).dot(BitVector({1, 1, 1})) == false);
  CHECK(BitVector({1, 1, 0}).to_string() == "110");
  CHECK(BitVector({1, 1, 0}).resized(2) == BitVector({1, 1}));
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(BitMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
  CHECK(rank(BitMatrix(3, 4)) == 0);
  CHECK(rank(BitMatrix{{1, 0}, {0, 1}}) == 2);
}

TEST_CASE("nullspace matches exhaustive kernel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 10;
    const BitMatrix g = random_matrix(rng, rows, cols);
    const BitMatrix p = nullspace_basis(g);
    CHECK(g.multiply_transposed(p).is_zero());
    CHECK(rank(p) == p.rows());
    CHECK(p.rows() + rank(g) == cols);

    oracle::Columns columns;
    for (std::size_t c = 0; c < cols; ++c) columns.push_back(mask_of(g.column(c)));
    CHECK(oracle::span_by_enumeration(row_masks(p)) ==
          oracle::kernel_by_enumeration(columns));
  }
}

TEST_CASE("canonical form is invariant under row operations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    BitMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 9);
    const BitMatrix before = canonical_form(m);
    BitMatrix mixed = m;
    for (int k = 0; k < 6 && mixed.rows() > 1; ++k) {
      const std::size_t a = rng() % mixed.rows(), b = rng() % mixed.rows();
      if (a != b) mixed.row(a) ^= mixed.row(b);
      mixed.swap_rows(rng() % mixed.rows(), rng() % mixed.rows());
    }
    CHECK(canonical_form(mixed) == before);
    CHECK(canonical_form(before) == before);
    CHECK(before.rows() == rank(m));
  }
}

TEST_CASE("row space membership agrees with enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t cols = 1 + rng() % 8;
    const BitMatrix m = random_matrix(rng, 1 + rng() % 4, cols);
    const auto span = oracle::span_by_enumeration(row_masks(m));
    for (std::uint32_t x = 0; x < (1U << cols); ++x) {
      BitVector v(cols);
      for (std::size_t i = 0; i < cols; ++i) v.set(i, (x >> i) & 1U);
      CHECK(in_row_space(v, m) == span.contains(x));
    }
  }
}

TEST_CASE("row reduction reports pivots in increasing order") {
  const auto r = row_reduce(BitMatrix{{0, 1, 1}, {0, 1, 0}, {0, 0, 1}});
  CHECK(r.pivots == std::vector<std::size_t>{1, 2});
}

TEST_CASE("transpose and products") {
  const BitMatrix a{{1, 0, 1}, {0, 1, 1}};
  CHECK(a.transposed().transposed() == a);
  CHECK(a.multiply(BitVector({1, 1, 1})) == BitVector({0, 0}));
  CHECK(a.multiply_transposed(a) == BitMatrix{{0, 1}, {1, 0}});
}
