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

#include "parity/circuit.hpp"
#include "parity/layout_optimizer.hpp"

namespace parity {

/// Angles of a p-layer QAOA run. constraint_angles is either empty (every
/// constraint uses -gamma of its layer) or holds one list per layer with one
/// angle per basis constraint.
struct QaoaSchedule {
  std::vector<double> gammas;
  std::vector<double> betas;
  std::vector<std::vector<double>> constraint_angles;

  std::size_t layers() const { return gammas.size(); }
  /// Throws std::invalid_argument on inconsistent lengths.
  void validate(std::size_t n_constraints) const;
  double constraint_angle(std::size_t layer, std::size_t constraint) const;
};

/// exp(i gamma sum_k J_k Z_k) as RZ(-2 gamma J_k) on every term qubit,
/// followed by exp(i a_c s_c prod Z) for every basis constraint c with sign
/// s_c. An empty angle list means a_c = -gamma for all constraints.
Circuit build_problem_layer(const CompilationState& state, double gamma,
                            std::span<const double> constraint_angles = {});

/// RX(-2 beta) on every placed qubit outside polynomial constraints, then
/// exp(i beta (XX + YY) / 2) on every device edge inside each polynomial
/// group, groups in order and edges sorted. Throws LocalityError if a group
/// is not connected on the device.
Circuit build_driver_layer(const CompilationState& state, double beta);

/// H on unconstrained qubits; polynomial groups start in their supplied
/// initial bits (RX(pi) on ones) with a note describing the state.
Circuit build_preparation(const CompilationState& state);

/// Preparation followed by (problem, driver) for each layer.
Circuit assemble(const CompilationState& state, const QaoaSchedule& schedule);

/// Device edges joining nodes of polynomial group k, sorted.
std::vector<Edge> exchange_pairs(const CompilationState& state, std::size_t k);

}  // namespace parity
