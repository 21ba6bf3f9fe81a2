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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace parity {

/// Fixed-length vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);
  BitVector(std::initializer_list<int> bits);

  static BitVector from_indices(
      std::size_t size, const std::vector<std::size_t>& indices);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  /// In-place addition mod 2. Sizes must match.
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  std::size_t popcount() const;
  bool none() const;
  bool any() const { return !none(); }
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  std::vector<std::size_t> indices() const;
  /// Inner product mod 2.
  bool dot(const BitVector& other) const;

  /// Resized copy; new positions are zero, truncated positions dropped.
  BitVector resized(std::size_t size) const;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2). Every row is a BitVector of length cols().
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVector>& row_vectors() const { return rows_; }

  void append_row(BitVector row);
  void swap_rows(std::size_t a, std::size_t b);

  BitVector column(std::size_t c) const;
  BitMatrix transposed() const;
  /// (this) * (other)^T mod 2; both operands need the same column count.
  BitMatrix multiply_transposed(const BitMatrix& other) const;
  /// this * v^T mod 2, as a vector of length rows().
  BitVector multiply(const BitVector& v) const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RowReduction {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are chosen column by column, taking
/// the first remaining row with a one; zero rows end up at the bottom and
/// the shape of the input is kept.
RowReduction row_reduce(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Row-reduced basis of {v : m * v^T = 0}, with cols(m) - rank(m) rows.
BitMatrix nullspace_basis(const BitMatrix& m);

/// Whether v is a GF(2) combination of the rows of basis. Throws
/// std::invalid_argument when the lengths differ.
bool in_row_space(const BitVector& v, const BitMatrix& basis);

/// Reduced row echelon form with zero rows removed. Two matrices have the
/// same row space iff their canonical forms are equal.
BitMatrix canonical_form(const BitMatrix& m);

}  // namespace parity
