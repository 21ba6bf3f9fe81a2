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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/constraint_basis.hpp"
#include "parity/problem.hpp"

namespace parity {

inline constexpr std::size_t kMaxOracleQubits = 12;
inline constexpr double kOracleTolerance = 1e-9;

using Amplitude = std::complex<double>;

/// Dense 2^n x 2^n matrix. Wire q is bit q of the basis-state index.
class DenseUnitary {
 public:
  /// Identity on n wires. Throws ResourceCapError above kMaxOracleQubits.
  explicit DenseUnitary(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }
  Amplitude& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Amplitude& at(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  /// Left-multiplies by the gate's matrix.
  void apply(const Gate& g);
  bool is_unitary(double tol = kOracleTolerance) const;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 1;
  std::vector<Amplitude> data_;
};

/// Product of the gate matrices, first gate applied first.
DenseUnitary circuit_unitary(const Circuit& c, std::size_t n_qubits);

/// exp(i sign angle prod_{q in qubits} Z_q) on n wires.
DenseUnitary constraint_target(std::span<const std::size_t> qubits, std::size_t n_qubits,
                               double angle, int sign = 1);

struct Equivalence {
  bool equivalent = false;
  double max_deviation = 0.0;
};

/// Compares up to a global phase taken from the largest-magnitude diagonal
/// entry of b^dagger a. Throws std::invalid_argument on a size mismatch.
Equivalence assert_equiv(const DenseUnitary& a, const DenseUnitary& b,
                         double tol = kOracleTolerance);

struct CodeSpaceReport {
  bool ok = false;
  std::string detail;
};

/// Enumerates every spin assignment allowed by the product constraints and
/// checks that each basis constraint takes its sign, with ancilla values
/// solved from the constraints themselves. Also checks that the basis
/// spans the whole target space and that its dimension is K' - rank(G).
/// Throws ResourceCapError above kMaxOracleQubits spins.
CodeSpaceReport check_code_space(const ParityMap& map, const ConstraintBasis& basis);

}  // namespace parity
