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


#include "parity/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "parity/errors.hpp"

namespace parity {

namespace {

void check_cap(std::size_t n, const char* what) {
  if (n > kMaxOracleQubits) {
    throw ResourceCapError(std::string(what) + " needs " + std::to_string(n) +
                           " qubits; the oracle stops at " +
                           std::to_string(kMaxOracleQubits));
  }
}

/// 2x2 matrix on one wire, row-major.
std::array<Amplitude, 4> one_qubit_matrix(const Gate& g) {
  using namespace std::complex_literals;
  const double h = g.angle / 2.0;
  switch (g.kind) {
    case GateKind::Rz:
      return {std::exp(-1i * h), 0.0, 0.0, std::exp(1i * h)};
    case GateKind::Rx:
      return {std::cos(h), -1i * std::sin(h), -1i * std::sin(h), std::cos(h)};
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return {s, s, s, -s};
    }
    default:
      throw std::logic_error("not a single-qubit gate");
  }
}

}  // namespace

DenseUnitary::DenseUnitary(std::size_t n_qubits) : n_(n_qubits) {
  check_cap(n_qubits, "dense unitary");
  dim_ = std::size_t{1} << n_qubits;
  data_.assign(dim_ * dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) at(i, i) = 1.0;
}

void DenseUnitary::apply(const Gate& g) {
  if (g.a >= n_ || (g.two_qubit() && g.b >= n_)) {
    throw std::invalid_argument("gate wire outside the unitary");
  }
  const std::size_t ma = std::size_t{1} << g.a;
  const std::size_t mb = std::size_t{1} << g.b;
  switch (g.kind) {
    case GateKind::Cnot:
      for (std::size_t r = 0; r < dim_; ++r) {
        if ((r & ma) && !(r & mb)) {
          std::swap_ranges(&at(r, 0), &at(r, 0) + dim_, &at(r | mb, 0));
        }
      }
      return;
    case GateKind::Exchange: {
      // exp(i t (XX + YY) / 2) mixes |01> and |10> only.
      const Amplitude c = std::cos(g.angle);
      const Amplitude s = Amplitude(0.0, std::sin(g.angle));
      for (std::size_t r = 0; r < dim_; ++r) {
        if (!(r & ma) || (r & mb)) continue;
        Amplitude* x = &at(r, 0);
        Amplitude* y = &at((r & ~ma) | mb, 0);
        for (std::size_t col = 0; col < dim_; ++col) {
          const Amplitude u = x[col], v = y[col];
          x[col] = c * u + s * v;
          y[col] = s * u + c * v;
        }
      }
      return;
    }
    default: {
      const auto m = one_qubit_matrix(g);
      for (std::size_t r = 0; r < dim_; ++r) {
        if (r & ma) continue;
        Amplitude* x = &at(r, 0);
        Amplitude* y = &at(r | ma, 0);
        for (std::size_t col = 0; col < dim_; ++col) {
          const Amplitude u = x[col], v = y[col];
          x[col] = m[0] * u + m[1] * v;
          y[col] = m[2] * u + m[3] * v;
        }
      }
    }
  }
}

bool DenseUnitary::is_unitary(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Amplitude sum = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) sum += std::conj(at(k, i)) * at(k, j);
      if (std::abs(sum - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

DenseUnitary circuit_unitary(const Circuit& c, std::size_t n_qubits) {
  check_cap(n_qubits, "circuit");
  if (c.width() > n_qubits) throw std::invalid_argument("circuit is wider than n_qubits");
  DenseUnitary u(n_qubits);
  for (const auto& g : c.gates()) u.apply(g);
  return u;
}

DenseUnitary constraint_target(std::span<const std::size_t> qubits, std::size_t n_qubits,
                               double angle, int sign) {
  DenseUnitary u(n_qubits);
  std::size_t mask = 0;
  for (std::size_t q : qubits) {
    if (q >= n_qubits) throw std::invalid_argument("constraint qubit outside the register");
    mask |= std::size_t{1} << q;
  }
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double z = (std::popcount(i & mask) % 2 == 0) ? 1.0 : -1.0;
    u.at(i, i) = std::polar(1.0, sign * angle * z);
  }
  return u;
}

Equivalence assert_equiv(const DenseUnitary& a, const DenseUnitary& b, double tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("unitaries differ in dimension");
  Amplitude phase_entry = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Amplitude d = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) d += std::conj(b.at(i, j)) * a.at(i, j);
    if (std::abs(d) > std::abs(phase_entry)) phase_entry = d;
  }
  const Amplitude phase =
      std::abs(phase_entry) > 0.0 ? phase_entry / std::abs(phase_entry) : Amplitude(1.0);
  Equivalence out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      out.max_deviation = std::max(out.max_deviation, std::abs(a.at(i, j) - phase * b.at(i, j)));
    }
  }
  out.equivalent = out.max_deviation <= tol;
  return out;
}

CodeSpaceReport check_code_space(const ParityMap& map, const ConstraintBasis& basis) {
  const auto& problem = map.problem();
  const std::size_t n = static_cast<std::size_t>(problem.n_spins);
  check_cap(n, "code-space enumeration");

  const BitMatrix g = build_generator_matrix(problem);
  const BitMatrix target = target_constraint_space(problem);
  if (target.rows() != g.cols() - rank(g)) {
    return {false, "target space dimension differs from K' - rank(G)"};
  }
  if (eliminate_ancillas(basis.constraints, map) != physical_target_space(map)) {
    return {false, "basis does not span the target constraint space"};
  }

  std::map<QubitId, std::size_t> ancilla_column;
  for (QubitId q = 0; q < map.size(); ++q) {
    if (map.qubit(q).is_ancilla) ancilla_column.emplace(q, ancilla_column.size());
  }
  const std::size_t rhs = ancilla_column.size();

  for (std::size_t assignment = 0; assignment < (std::size_t{1} << n); ++assignment) {
    // Bit i set means spin i + 1 is -1.
    auto spin_parity = [&](const BitVector& spins) {
      bool odd = false;
      for (std::size_t i : spins.indices()) odd ^= ((assignment >> i) & 1U) != 0;
      return odd;
    };
    bool allowed = true;
    for (const auto& pc : problem.product_constraints) {
      const bool odd = spin_parity(spins_to_bits(pc.spins, problem.n_spins));
      if (odd != (pc.sign == -1)) allowed = false;
    }
    if (!allowed) continue;

    BitMatrix system(0, rhs + 1);
    for (std::size_t c = 0; c < basis.constraints.size(); ++c) {
      const auto& con = basis.constraints[c];
      BitVector row(rhs + 1);
      bool value = con.sign == -1;
      for (QubitId q : con.qubits) {
        const auto& pq = map.qubit(q);
        if (pq.is_ancilla) {
          row.flip(ancilla_column.at(q));
        } else if (pq.is_virtual()) {
          value ^= *pq.fixed_sign == -1;
        } else {
          value ^= spin_parity(map.spin_bits(q));
        }
      }
      row.set(rhs, value);
      system.append_row(std::move(row));
    }
    const RowReduction rr = row_reduce(system);
    if (!rr.pivots.empty() && rr.pivots.back() == rhs) {
      return {false, "a basis constraint is violated for spin assignment " +
                         std::to_string(assignment)};
    }
  }
  return {true, "all constraints hold on the code space"};
}

}  // namespace parity
