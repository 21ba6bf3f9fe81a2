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
#include <optional>
#include <span>
#include <vector>

#include "parity/gf2.hpp"

namespace parity {

/// Sorted, duplicate-free set of 1-based logical spin indices.
using SpinSet = std::vector<int>;
using QubitId = std::size_t;

struct LogicalTerm {
  SpinSet spins;
  double coefficient = 0.0;
};

/// Side condition prod_{i in spins} sigma_z^(i) = sign.
struct ProductConstraint {
  SpinSet spins;
  int sign = 1;
};

/// Side condition sum_{m in members} sigma_z^(m) = value, where every member
/// names a term (and hence a parity qubit). Enforced by exchange drivers.
struct PolynomialConstraint {
  std::vector<SpinSet> members;
  int value = 0;
  /// Optional initial computational-basis bits, one per member.
  std::vector<int> initial_bits;
};

struct HcboProblem {
  int n_spins = 0;
  std::vector<LogicalTerm> terms;
  std::vector<ProductConstraint> product_constraints;
  std::vector<PolynomialConstraint> polynomial_constraints;

  /// Throws InputError describing the first violated invariant.
  void validate() const;
  std::optional<std::size_t> find_term(const SpinSet& spins) const;
  /// Term indices of the members of polynomial constraint `index`.
  std::vector<std::size_t> polynomial_member_terms(std::size_t index) const;
};

struct ParityQubit {
  QubitId id = 0;
  /// Logical spins whose product this qubit holds. Ancillas carry the
  /// parity they are forced to by their constraint chain.
  SpinSet label;
  bool is_ancilla = false;
  /// Set only for product-constraint qubits, which never reach hardware.
  std::optional<int> fixed_sign;

  bool is_virtual() const { return fixed_sign.has_value(); }
};

/// prod_{q in qubits} sigma_z^(q) = sign on the code space.
struct Constraint {
  std::vector<QubitId> qubits;
  int sign = 1;

  std::size_t size() const { return qubits.size(); }
  bool contains(QubitId q) const;
  BitVector to_bits(std::size_t width) const;
  static Constraint from_bits(const BitVector& bits, int sign = 1);

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Expresses spin products as combinations of the product constraints.
class ProductConstraintResolver {
 public:
  /// Throws InputError when the product constraints contradict each other.
  explicit ProductConstraintResolver(const HcboProblem& problem);

  /// Sign of prod_{i in spins} sigma_z^(i) implied by the product
  /// constraints, or nullopt when the product is not fixed by them.
  std::optional<int> fixed_sign(const BitVector& spins) const;
  /// Indices of product constraints whose spin sets xor to `spins`.
  std::optional<std::vector<std::size_t>> decompose(const BitVector& spins) const;

 private:
  std::vector<BitVector> rows_;
  std::vector<BitVector> combos_;
  std::vector<std::size_t> pivots_;
  std::vector<int> signs_;
  std::size_t n_spins_ = 0;
  std::size_t n_products_ = 0;
};

/// Registry of every qubit of a parity mapping. Ids are assigned as
/// [0, K) for terms in input order, [K, K+M) for product-constraint
/// (virtual) qubits, then ancillas in creation order.
class ParityMap {
 public:
  explicit ParityMap(HcboProblem problem);

  const HcboProblem& problem() const { return problem_; }
  std::size_t size() const { return qubits_.size(); }
  std::size_t num_terms() const { return problem_.terms.size(); }
  std::size_t num_virtual() const { return problem_.product_constraints.size(); }
  std::size_t num_ancillas() const { return size() - num_terms() - num_virtual(); }

  const ParityQubit& qubit(QubitId id) const;
  const std::vector<ParityQubit>& qubits() const { return qubits_; }
  const BitVector& spin_bits(QubitId id) const;

  /// Term and ancilla qubits, i.e. everything that is placed on hardware.
  std::vector<QubitId> physical_ids() const;

  QubitId add_ancilla(SpinSet label);

  /// Xor of the spin labels of `qubits`.
  BitVector spin_parity(std::span<const QubitId> qubits) const;
  /// Sign of the product of `qubits` if it is constant on the code space.
  std::optional<int> constraint_sign(std::span<const QubitId> qubits) const;
  /// Virtual qubits completing `qubits` to a set whose labels cancel.
  std::optional<std::vector<QubitId>> virtual_completion(
      std::span<const QubitId> qubits) const;

 private:
  HcboProblem problem_;
  ProductConstraintResolver resolver_;
  std::vector<ParityQubit> qubits_;
  std::vector<BitVector> spin_bits_;
};

SpinSet spins_from_bits(const BitVector& bits);
BitVector spins_to_bits(const SpinSet& spins, int n_spins);

/// N x (K + M) incidence matrix: one column per term followed by one per
/// product constraint.
BitMatrix build_generator_matrix(const HcboProblem& problem);

/// Row-reduced basis of the nullspace of the generator matrix. Rows range
/// over term and product-constraint columns.
BitMatrix target_constraint_space(const HcboProblem& problem);

/// Removes virtual qubits from `c`, multiplying in their fixed signs.
Constraint fold_virtual_qubits(
    const Constraint& c, std::span<const ParityQubit> qubits);

}  // namespace parity
