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

#include "parity/circuit.hpp"
#include "parity/device.hpp"
#include "parity/steiner.hpp"

namespace parity {

/// Tree node whose largest distance to a leaf is smallest. Every tree node
/// is considered; ties prefer nodes in `constraint`, then the smallest id.
NodeId choose_root(const SteinerTree& tree, std::span<const NodeId> constraint);

/// Largest distance from `n` to any tree node.
std::size_t eccentricity(const SteinerTree& tree, NodeId n);

/// exp(i angle prod_{m in T} Z_m) for a tree whose nodes are all constraint
/// qubits: child-to-parent CNOT fan-in, RZ(-2 angle) on the root, mirrored
/// fan-out. Throws std::invalid_argument for malformed trees or trees that
/// contain non-terminal nodes.
Circuit synth_local(const SteinerTree& tree, NodeId root, double angle);

/// exp(i angle prod_{m in C} Z_m) over a tree that may pass through other
/// qubits. Each non-constraint node first copies its parity onto one child,
/// deepest nodes first, so it enters the root parity twice and cancels.
/// Uses 4|T| - 2|C| - 2 CNOTs. With no root given, every node of minimal
/// eccentricity is tried and the shallowest circuit kept.
Circuit synth_bridged(const SteinerTree& tree, std::span<const NodeId> constraint,
                      double angle, std::optional<NodeId> root = std::nullopt);

/// Naive comparison circuit: SWAP the constraint qubits along the Steiner
/// tree towards a central root until they are adjacent, apply the local
/// circuit, and swap back. Each SWAP is three CNOTs; nothing is cancelled.
Circuit synth_swap_baseline(const DeviceGraph& g, std::span<const NodeId> constraint,
                            double angle);

/// Entangling depth of the circuit that treats every tree node as a
/// constraint qubit, rooted at `root`.
std::size_t full_tree_depth(const SteinerTree& tree, NodeId root);

}  // namespace parity
