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

#include "parity/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parity {

namespace {
std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

BitVector::BitVector(std::size_t size)
    : size_(size), words_(words_for(size), 0) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("BitVector entries must be 0 or 1");
    }
    set(i++, b == 1);
  }
}

BitVector BitVector::from_indices(
    std::size_t size, const std::vector<std::size_t>& indices) {
  BitVector v(size);
  for (std::size_t i : indices) {
    if (i >= size) throw std::out_of_range("bit index out of range");
    v.set(i);
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw std::invalid_argument("BitVector size mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::none() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return size_;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) {
    throw std::invalid_argument("BitVector size mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

BitVector BitVector::resized(std::size_t size) const {
  BitVector out(size);
  const std::size_t keep = std::min(size, size_);
  for (std::size_t i = 0; i < keep; ++i) {
    if (get(i)) out.set(i);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged BitMatrix");
    rows_.emplace_back(r);
  }
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
  BitMatrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("row length does not match column count");
  }
  rows_.push_back(std::move(row));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  std::swap(rows_[a], rows_[b]);
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
  return v;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].indices()) t.set(c, r);
  }
  return t;
}

BitMatrix BitMatrix::multiply_transposed(const BitMatrix& other) const {
  if (other.cols_ != cols_) {
    throw std::invalid_argument("column counts differ in A*B^T");
  }
  BitMatrix out(rows(), other.rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < other.rows(); ++j) {
      out.set(i, j, rows_[i].dot(other.rows_[j]));
    }
  }
  return out;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  BitVector out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out.set(i, rows_[i].dot(v));
  return out;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (r.any()) return false;
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s.push_back('\n');
  }
  return s;
}

RowReduction row_reduce(const BitMatrix& m) {
  RowReduction out{m, {}};
  BitMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && !a.get(r, c)) ++r;
    if (r == a.rows()) continue;
    a.swap_rows(pivot_row, r);
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other != pivot_row && a.get(other, c)) {
        a.row(other) ^= a.row(pivot_row);
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const BitMatrix& m) { return row_reduce(m).pivots.size(); }

BitMatrix canonical_form(const BitMatrix& m) {
  RowReduction rr = row_reduce(m);
  BitMatrix out(0, m.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    out.append_row(rr.reduced.row(r));
  }
  return out;
}

BitMatrix nullspace_basis(const BitMatrix& m) {
  const RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;

  BitMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      if (rr.reduced.get(i, free)) v.set(rr.pivots[i]);
    }
    basis.append_row(std::move(v));
  }
  return canonical_form(basis);
}

bool in_row_space(const BitVector& v, const BitMatrix& basis) {
  if (v.size() != basis.cols()) {
    throw std::invalid_argument(
        "in_row_space: vector length " + std::to_string(v.size()) +
        " does not match basis width " + std::to_string(basis.cols()));
  }
  const RowReduction rr = row_reduce(basis);
  BitVector residual = v;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (residual.get(rr.pivots[i])) residual ^= rr.reduced.row(i);
  }
  return residual.none();
}

}  // namespace parity
