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
#include <span>
#include <vector>

#include "parity/gf2.hpp"
#include "parity/problem.hpp"

namespace parity {

inline constexpr std::size_t kDefaultMaxConstraintLength = 4;

struct ConstraintBasis {
  /// Constraints over term and ancilla qubits (no virtual members).
  std::vector<Constraint> constraints;
  std::vector<QubitId> ancillas;
};

/// True iff every logical spin occurs an even number of times across the
/// labels of `qubits`. Throws std::invalid_argument for unknown or repeated
/// ids.
bool is_valid_constraint(std::span<const QubitId> qubits, const ParityMap& map);

/// All constraints over the physical term qubits with 2 to max_len members
/// that hold on the code space, in lexicographic order of their sorted id
/// tuples. A subset that is only fixed through product constraints is
/// completed with the matching virtual qubits, checked, and folded.
std::vector<Constraint> enumerate_short_constraints(
    const ParityMap& map, std::size_t max_len);

struct BasisGrowth {
  std::vector<Constraint> basis;
  /// Rows of the target space not spanned by `basis`, one per missing
  /// dimension.
  BitMatrix uncovered;
};

/// Greedy basis selection: candidates are taken by increasing length, then
/// lexicographically, and kept when they lie in `target` and are linearly
/// independent of the basis so far.
BasisGrowth grow_short_basis(
    const BitMatrix& target, std::span<const Constraint> candidates);

struct ConstraintChain {
  std::vector<Constraint> constraints;
  std::vector<QubitId> ancillas;
};

/// Splits `c` into a chain of constraints of length <= max_len linked by
/// fresh ancillas registered in `map`. Qubits are chunked in the order
/// given by `order` (all of c's qubits), or by id when `order` is empty.
/// Constraints already short enough come back unchanged.
ConstraintChain break_long_constraint(
    const Constraint& c, std::size_t max_len, ParityMap& map,
    std::span<const QubitId> order = {});

/// Canonical basis of all code-space constraints over term qubits, with
/// product-constraint qubits folded away. Width is num_terms + num_virtual;
/// virtual columns are always zero.
BitMatrix physical_target_space(const ParityMap& map);

/// Canonical form of span(constraints) intersected with the ancilla-free
/// subspace, restricted to term and virtual columns.
BitMatrix eliminate_ancillas(
    std::span<const Constraint> constraints, const ParityMap& map);

/// Full basis construction: short constraints first, then ancilla chains
/// for whatever the short constraints cannot span.
ConstraintBasis build_constraint_basis(
    ParityMap& map, std::size_t max_len = kDefaultMaxConstraintLength);

}  // namespace parity
