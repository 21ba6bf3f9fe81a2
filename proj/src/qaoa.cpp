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


#include "parity/qaoa.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "parity/errors.hpp"

namespace parity {

namespace {

std::set<QubitId> grouped_qubits(const ParityMap& map) {
  std::set<QubitId> out;
  for (std::size_t k = 0; k < map.problem().polynomial_constraints.size(); ++k) {
    for (std::size_t t : map.problem().polynomial_member_terms(k)) out.insert(t);
  }
  return out;
}

}  // namespace

void QaoaSchedule::validate(std::size_t n_constraints) const {
  if (betas.size() != gammas.size()) {
    throw std::invalid_argument("gamma and beta lists differ in length");
  }
  if (constraint_angles.empty()) return;
  if (constraint_angles.size() != gammas.size()) {
    throw std::invalid_argument("constraint angles need one list per layer");
  }
  for (const auto& layer : constraint_angles) {
    if (layer.size() != n_constraints) {
      throw std::invalid_argument("constraint angles need one value per constraint");
    }
  }
}

double QaoaSchedule::constraint_angle(std::size_t layer, std::size_t constraint) const {
  if (constraint_angles.empty()) return -gammas.at(layer);
  return constraint_angles.at(layer).at(constraint);
}

Circuit build_problem_layer(const CompilationState& state, double gamma,
                            std::span<const double> constraint_angles) {
  const auto& constraints = state.basis().constraints;
  if (!constraint_angles.empty() && constraint_angles.size() != constraints.size()) {
    throw std::invalid_argument("constraint angles need one value per constraint");
  }
  Circuit out;
  const auto& terms = state.map().problem().terms;
  for (QubitId k = 0; k < terms.size(); ++k) {
    out.add(Gate::rz(state.layout().node_checked(k), -2.0 * gamma * terms[k].coefficient));
  }
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const double alpha = constraint_angles.empty() ? -gamma : constraint_angles[c];
    out.append(with_constraint_angle(state.plans()[c]->circuit, alpha * constraints[c].sign));
  }
  return out;
}

std::vector<Edge> exchange_pairs(const CompilationState& state, std::size_t k) {
  std::set<NodeId> nodes;
  for (std::size_t t : state.map().problem().polynomial_member_terms(k)) {
    nodes.insert(state.layout().node_checked(t));
  }
  std::vector<Edge> out;
  for (auto [a, b] : state.device().edges()) {
    if (nodes.contains(a) && nodes.contains(b)) out.push_back({a, b});
  }
  return out;
}

Circuit build_driver_layer(const CompilationState& state, double beta) {
  if (auto reason = locality_violation(state.map(), state.device(), state.layout())) {
    throw LocalityError(*reason);
  }
  Circuit out;
  const auto grouped = grouped_qubits(state.map());
  for (QubitId q : state.map().physical_ids()) {
    if (!grouped.contains(q)) out.add(Gate::rx(state.layout().node_checked(q), -2.0 * beta));
  }
  const std::size_t n_groups = state.map().problem().polynomial_constraints.size();
  for (std::size_t k = 0; k < n_groups; ++k) {
    for (auto [a, b] : exchange_pairs(state, k)) out.add(Gate::exchange(a, b, beta));
  }
  return out;
}

Circuit build_preparation(const CompilationState& state) {
  Circuit out;
  const auto grouped = grouped_qubits(state.map());
  for (QubitId q : state.map().physical_ids()) {
    if (!grouped.contains(q)) out.add(Gate::h(state.layout().node_checked(q)));
  }
  const auto& problem = state.map().problem();
  for (std::size_t k = 0; k < problem.polynomial_constraints.size(); ++k) {
    const auto& pc = problem.polynomial_constraints[k];
    const auto members = problem.polynomial_member_terms(k);
    std::string note = "polynomial constraint " + std::to_string(k) + " on";
    for (std::size_t t : members) {
      note += " q[" + std::to_string(state.layout().node_checked(t)) + "]";
    }
    if (pc.initial_bits.empty()) {
      note += " starts in |0...0>; no initial bits were supplied";
    } else {
      note += " starts in |";
      for (std::size_t i = 0; i < members.size(); ++i) {
        note += std::to_string(pc.initial_bits[i]);
        if (pc.initial_bits[i] == 1) {
          out.add(Gate::rx(state.layout().node_checked(members[i]), std::numbers::pi));
        }
      }
      note += ">";
    }
    out.add_note(note);
  }
  if (problem.polynomial_constraints.size() > 0) {
    out.add_note("exchange drivers are a first-order product over sorted device edges");
  }
  return out;
}

Circuit assemble(const CompilationState& state, const QaoaSchedule& schedule) {
  schedule.validate(state.basis().constraints.size());
  Circuit out = build_preparation(state);
  for (std::size_t layer = 0; layer < schedule.layers(); ++layer) {
    std::vector<double> angles;
    if (!schedule.constraint_angles.empty()) angles = schedule.constraint_angles[layer];
    out.append(build_problem_layer(state, schedule.gammas[layer], angles));
    out.append(build_driver_layer(state, schedule.betas[layer]));
  }
  return out;
}

}  // namespace parity
