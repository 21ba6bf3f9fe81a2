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

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parity/problem.hpp"

namespace parity {

/// Dense node index in [0, size()).
using NodeId = std::size_t;

struct Coord {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

using Edge = std::pair<NodeId, NodeId>;

/// Undirected, connected device connectivity graph. Nodes may carry integer
/// planar coordinates, which enable the rectilinear Steiner constructions.
class DeviceGraph {
 public:
  DeviceGraph() = default;
  /// Throws InputError on bad edges or duplicate coordinates and
  /// DisconnectedDeviceError when the graph is not connected.
  DeviceGraph(std::size_t n, std::vector<Edge> edges,
              std::vector<std::optional<Coord>> coords = {},
              std::vector<long long> labels = {});

  static DeviceGraph chain(std::size_t n);
  /// Node (x, y) has index y * width + x.
  static DeviceGraph grid(std::size_t width, std::size_t height);

  std::size_t size() const { return adjacency_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId n) const { return adjacency_.at(n); }
  bool has_edge(NodeId a, NodeId b) const;

  const std::optional<Coord>& coord(NodeId n) const { return coords_.at(n); }
  bool fully_embedded() const;
  std::optional<NodeId> node_at(Coord c) const;
  /// External id from the device file; equals the index for generators.
  long long label(NodeId n) const { return labels_.at(n); }

  /// Shortest-path edge count.
  std::size_t distance(NodeId a, NodeId b) const;
  /// Shortest path from a to b; ties go to the smallest next node.
  std::vector<NodeId> shortest_path(NodeId a, NodeId b) const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::optional<Coord>> coords_;
  std::vector<long long> labels_;
  std::map<Coord, NodeId> by_coord_;
  std::vector<std::size_t> dist_;
  std::string name_;
};

/// Parses {"nodes": [{"id": 0, "x": 0, "y": 0}, ...], "edges": [[0, 1], ...]}.
DeviceGraph device_from_json(const nlohmann::json& doc);
nlohmann::json device_to_json(const DeviceGraph& g);
/// Accepts "chain:N", "grid:WxH", or a path to a device file.
DeviceGraph load_device(const std::string& source);

/// Injective assignment of parity qubits to device nodes.
class Layout {
 public:
  Layout() = default;
  Layout(std::size_t n_qubits, std::size_t n_nodes);

  std::size_t num_qubits() const { return node_of_.size(); }
  std::size_t num_nodes() const { return qubit_at_.size(); }

  void place(QubitId q, NodeId n);
  void unplace(QubitId q);
  /// Exchanges the nodes of two placed qubits.
  void swap_qubits(QubitId a, QubitId b);
  /// Moves a placed qubit to a free node.
  void relocate(QubitId q, NodeId n);
  /// Grows the qubit range, e.g. after new ancillas were registered.
  void resize_qubits(std::size_t n_qubits);

  std::optional<NodeId> node(QubitId q) const { return node_of_.at(q); }
  NodeId node_checked(QubitId q) const;
  std::optional<QubitId> occupant(NodeId n) const { return qubit_at_.at(n); }
  std::vector<NodeId> free_nodes() const;

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<std::optional<NodeId>> node_of_;
  std::vector<std::optional<QubitId>> qubit_at_;
};

}  // namespace parity
