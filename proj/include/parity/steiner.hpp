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

#include "parity/device.hpp"

namespace parity {

struct SteinerTree {
  /// Sorted, duplicate-free.
  std::vector<NodeId> terminals;
  /// Every node touched by the tree, sorted.
  std::vector<NodeId> nodes;
  /// Sorted edges with first < second.
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  bool contains(NodeId n) const;
  bool is_terminal(NodeId n) const;
  /// Tree neighbours of n, sorted.
  std::vector<NodeId> neighbors(NodeId n) const;

  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

/// Connected, acyclic, spans the terminals, all leaves are terminals, and
/// every edge exists in g.
bool is_valid_steiner_tree(const SteinerTree& tree, const DeviceGraph& g);

/// Largest number of tree edges between two terminals.
std::size_t terminal_span(const SteinerTree& tree);

/// Strict order used to pick among candidate trees: size, then terminal
/// span, then the edge lists lexicographically.
bool better_tree(const SteinerTree& a, const SteinerTree& b);

/// Rectilinear construction for three terminals: L-shaped paths to the
/// coordinate-wise median. Returns nullopt when a terminal has no
/// coordinates or a required grid node or edge is missing.
std::optional<SteinerTree> rect_steiner_3(
    const DeviceGraph& g, std::span<const NodeId> terminals);

/// Rectilinear construction for four terminals: every terminal is joined to
/// the nearest corner of the central rectangle [x2, x3] x [y2, y3], and the
/// used corners are joined along the rectangle's sides. Same fallback
/// contract as rect_steiner_3.
std::optional<SteinerTree> rect_steiner_4(
    const DeviceGraph& g, std::span<const NodeId> terminals);

/// Metric-closure MST heuristic with leaf pruning; at most twice optimal.
/// Throws std::invalid_argument for unknown terminals.
SteinerTree general_steiner(const DeviceGraph& g, std::span<const NodeId> terminals);

/// Best available tree: the rectilinear constructions where they apply,
/// otherwise (or if better) the general heuristic.
SteinerTree steiner_tree(const DeviceGraph& g, std::span<const NodeId> terminals);

}  // namespace parity
