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
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "parity/circuit.hpp"
#include "parity/constraint_basis.hpp"
#include "parity/device.hpp"
#include "parity/problem.hpp"
#include "parity/steiner.hpp"

namespace parity {

enum class CostOrder { CnotFirst, DepthFirst };

struct Cost {
  std::size_t cnots = 0;
  std::size_t depth = 0;
  friend bool operator==(const Cost&, const Cost&) = default;
};

/// Strict lexicographic comparison in the given priority.
bool cost_less(const Cost& a, const Cost& b, CostOrder order);

/// Synthesized circuit of one constraint at its current device nodes. The
/// circuit uses angle 1; see with_constraint_angle.
struct PlacedConstraint {
  std::vector<NodeId> nodes;
  SteinerTree tree;
  Circuit circuit;
};

/// Memo of placed constraints keyed by their sorted device nodes. The
/// synthesis result depends only on the node set, so sharing is safe.
class SynthesisCache {
 public:
  std::shared_ptr<const PlacedConstraint> get(
      const DeviceGraph& g, const std::vector<NodeId>& nodes);

 private:
  std::mutex mutex_;
  std::map<std::vector<NodeId>, std::shared_ptr<const PlacedConstraint>> entries_;
};

/// Sets the rotation of a unit-angle constraint circuit to `angle`.
Circuit with_constraint_angle(const Circuit& unit, double angle);

class CompilationState {
 public:
  CompilationState(std::shared_ptr<const ParityMap> map,
                   std::shared_ptr<const DeviceGraph> device, Layout layout,
                   ConstraintBasis basis, SynthesisCache* cache = nullptr);

  const ParityMap& map() const { return *map_; }
  const DeviceGraph& device() const { return *device_; }
  const std::shared_ptr<const ParityMap>& map_ptr() const { return map_; }
  const std::shared_ptr<const DeviceGraph>& device_ptr() const { return device_; }
  const Layout& layout() const { return layout_; }
  const ConstraintBasis& basis() const { return basis_; }
  const std::vector<std::shared_ptr<const PlacedConstraint>>& plans() const { return plans_; }
  /// (sum of constraint CNOTs, entangling depth of all constraint circuits
  /// run back to back in basis order).
  const Cost& cost() const { return cost_; }

 private:
  std::shared_ptr<const ParityMap> map_;
  std::shared_ptr<const DeviceGraph> device_;
  Layout layout_;
  ConstraintBasis basis_;
  std::vector<std::shared_ptr<const PlacedConstraint>> plans_;
  Cost cost_;
};

inline const Cost& cost(const CompilationState& s) { return s.cost(); }

/// Reason why some polynomial-constraint group does not induce a connected
/// device subgraph, or nullopt when all groups are local.
std::optional<std::string> locality_violation(
    const ParityMap& map, const DeviceGraph& g, const Layout& layout);

/// Exchanges the nodes of two placed qubits. Throws LocalityError.
CompilationState swap_move(const CompilationState& s, QubitId a, QubitId b,
                           SynthesisCache* cache = nullptr);
/// Moves a placed qubit to a free node. Throws LocalityError.
CompilationState relocate_move(const CompilationState& s, QubitId q, NodeId node,
                               SynthesisCache* cache = nullptr);
/// Replaces basis row i by row i + row j; signs multiply.
CompilationState basis_move(const CompilationState& s, std::size_t i, std::size_t j,
                            SynthesisCache* cache = nullptr);

/// Greedy placement: polynomial groups first as connected blocks of free
/// nodes, then the remaining qubits by affinity to already placed ones.
/// Throws InfeasiblePlacementError when no such layout is found.
Layout initial_layout(const ParityMap& map, const DeviceGraph& g,
                      const ConstraintBasis& basis);

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 10000;
  std::size_t restarts = 8;
  CostOrder order = CostOrder::CnotFirst;
};

struct TraceEntry {
  std::size_t restart = 0;
  std::size_t evaluation = 0;
  std::string move;
  std::size_t a = 0;
  std::size_t b = 0;
  Cost cost;
};

nlohmann::json trace_to_json(const TraceEntry& e);

struct SearchResult {
  CompilationState best;
  Cost initial_cost;
  std::size_t best_restart = 0;
  std::size_t evaluations = 0;
  /// Start states and accepted moves of every restart, restart by restart.
  std::vector<TraceEntry> trace;
};

/// First-improvement hill climbing over swap, relocate and basis moves
/// with random restarts run in parallel. Restart 0 starts from the greedy
/// layout, later ones from randomized layouts. Each restart gets an equal
/// share of the move-evaluation budget and stops at a local optimum.
/// Deterministic for a given seed.
SearchResult local_search(std::shared_ptr<const ParityMap> map,
                          std::shared_ptr<const DeviceGraph> device,
                          const ConstraintBasis& basis, const SearchOptions& options);

}  // namespace parity
