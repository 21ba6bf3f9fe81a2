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


#include "parity/layout_optimizer.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

#include "parity/errors.hpp"
#include "parity/synthesis.hpp"

namespace parity {

namespace {

std::vector<std::vector<QubitId>> polynomial_groups(const ParityMap& map) {
  std::vector<std::vector<QubitId>> groups;
  const auto& problem = map.problem();
  for (std::size_t i = 0; i < problem.polynomial_constraints.size(); ++i) {
    const auto terms = problem.polynomial_member_terms(i);
    groups.emplace_back(terms.begin(), terms.end());
  }
  return groups;
}

std::shared_ptr<const PlacedConstraint> place_constraint(
    const DeviceGraph& g, const std::vector<NodeId>& nodes) {
  auto out = std::make_shared<PlacedConstraint>();
  out->nodes = nodes;
  out->tree = steiner_tree(g, nodes);
  out->circuit = synth_bridged(out->tree, nodes, 1.0);
  return out;
}

/// Places the groups as connected blocks of free nodes, backtracking over
/// block start nodes.
bool place_groups(const DeviceGraph& g, const std::vector<std::vector<QubitId>>& groups,
                  std::size_t k, Layout& layout, std::size_t& attempts) {
  if (k == groups.size()) return true;
  const auto& group = groups[k];
  for (NodeId start = 0; start < g.size(); ++start) {
    if (layout.occupant(start) || ++attempts > 100000) continue;
    std::vector<NodeId> block{start};
    std::set<NodeId> seen{start};
    for (std::size_t i = 0; i < block.size() && block.size() < group.size(); ++i) {
      for (NodeId v : g.neighbors(block[i])) {
        if (block.size() == group.size()) break;
        if (layout.occupant(v) || !seen.insert(v).second) continue;
        block.push_back(v);
      }
    }
    if (block.size() < group.size()) continue;
    for (std::size_t i = 0; i < group.size(); ++i) layout.place(group[i], block[i]);
    if (place_groups(g, groups, k + 1, layout, attempts)) return true;
    for (QubitId q : group) layout.unplace(q);
  }
  return false;
}

Layout grouped_layout(const ParityMap& map, const DeviceGraph& g) {
  const auto physical = map.physical_ids();
  if (physical.size() > g.size()) {
    throw InfeasiblePlacementError(
        "device has " + std::to_string(g.size()) + " nodes but " +
        std::to_string(physical.size()) + " qubits need placing");
  }
  Layout layout(map.size(), g.size());
  std::size_t attempts = 0;
  if (!place_groups(g, polynomial_groups(map), 0, layout, attempts)) {
    throw InfeasiblePlacementError(
        "polynomial constraint groups cannot all be placed as connected blocks");
  }
  return layout;
}

Layout random_layout(const ParityMap& map, const DeviceGraph& g, std::mt19937_64& rng) {
  Layout layout = grouped_layout(map, g);
  std::vector<QubitId> rest;
  for (QubitId q : map.physical_ids()) {
    if (!layout.node(q)) rest.push_back(q);
  }
  auto free = layout.free_nodes();
  std::shuffle(free.begin(), free.end(), rng);
  for (std::size_t i = 0; i < rest.size(); ++i) layout.place(rest[i], free[i]);
  return layout;
}

struct Move {
  enum Kind { Swap, Relocate, Basis } kind;
  std::size_t a;
  std::size_t b;
};

const char* move_name(Move::Kind k) {
  switch (k) {
    case Move::Swap:
      return "swap";
    case Move::Relocate:
      return "relocate";
    default:
      return "basis";
  }
}

struct RestartResult {
  std::optional<CompilationState> best;
  std::size_t evaluations = 0;
  std::vector<TraceEntry> trace;
};

RestartResult run_restart(const std::shared_ptr<const ParityMap>& map,
                          const std::shared_ptr<const DeviceGraph>& device,
                          const ConstraintBasis& basis, const Layout& greedy,
                          const SearchOptions& options, std::size_t restart,
                          std::size_t budget) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  SynthesisCache cache;
  const Layout start = restart == 0 ? greedy : random_layout(*map, *device, rng);

  RestartResult out;
  CompilationState current(map, device, start, basis, &cache);
  out.trace.push_back({restart, 0, "start", 0, 0, current.cost()});
  const auto physical = map->physical_ids();

  bool improved = true;
  while (improved && out.evaluations < budget) {
    improved = false;
    std::vector<Move> moves;
    for (std::size_t i = 0; i < physical.size(); ++i) {
      for (std::size_t j = i + 1; j < physical.size(); ++j) {
        moves.push_back({Move::Swap, physical[i], physical[j]});
      }
    }
    const auto free = current.layout().free_nodes();
    for (QubitId q : physical) {
      for (NodeId n : free) moves.push_back({Move::Relocate, q, n});
    }
    const std::size_t rows = current.basis().constraints.size();
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < rows; ++j) {
        if (i != j) moves.push_back({Move::Basis, i, j});
      }
    }
    std::shuffle(moves.begin(), moves.end(), rng);

    for (const Move& m : moves) {
      if (out.evaluations >= budget) break;
      if (m.kind != Move::Basis) {
        Layout trial = current.layout();
        if (m.kind == Move::Swap) {
          trial.swap_qubits(m.a, m.b);
        } else {
          trial.relocate(m.a, m.b);
        }
        if (locality_violation(*map, *device, trial)) continue;
      }
      ++out.evaluations;
      CompilationState candidate =
          m.kind == Move::Swap       ? swap_move(current, m.a, m.b, &cache)
          : m.kind == Move::Relocate ? relocate_move(current, m.a, m.b, &cache)
                                     : basis_move(current, m.a, m.b, &cache);
      if (cost_less(candidate.cost(), current.cost(), options.order)) {
        current = std::move(candidate);
        out.trace.push_back(
            {restart, out.evaluations, move_name(m.kind), m.a, m.b, current.cost()});
        improved = true;
        break;
      }
    }
  }
  out.best = std::move(current);
  return out;
}

}  // namespace

bool cost_less(const Cost& a, const Cost& b, CostOrder order) {
  if (order == CostOrder::CnotFirst) {
    return std::tie(a.cnots, a.depth) < std::tie(b.cnots, b.depth);
  }
  return std::tie(a.depth, a.cnots) < std::tie(b.depth, b.cnots);
}

std::shared_ptr<const PlacedConstraint> SynthesisCache::get(
    const DeviceGraph& g, const std::vector<NodeId>& nodes) {
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(nodes);
    if (it != entries_.end()) return it->second;
  }
  auto placed = place_constraint(g, nodes);
  std::lock_guard lock(mutex_);
  return entries_.emplace(nodes, std::move(placed)).first->second;
}

Circuit with_constraint_angle(const Circuit& unit, double angle) {
  Circuit out;
  std::size_t rotations = 0;
  for (Gate g : unit.gates()) {
    if (g.kind == GateKind::Rz) {
      g.angle = -2.0 * angle;
      ++rotations;
    }
    out.add(g);
  }
  if (rotations != 1) throw std::logic_error("constraint circuit needs exactly one rotation");
  return out;
}

CompilationState::CompilationState(std::shared_ptr<const ParityMap> map,
                                   std::shared_ptr<const DeviceGraph> device,
                                   Layout layout, ConstraintBasis basis,
                                   SynthesisCache* cache)
    : map_(std::move(map)),
      device_(std::move(device)),
      layout_(std::move(layout)),
      basis_(std::move(basis)) {
  std::vector<std::size_t> level(device_->size(), 0);
  for (const auto& c : basis_.constraints) {
    std::vector<NodeId> nodes;
    for (QubitId q : c.qubits) nodes.push_back(layout_.node_checked(q));
    std::sort(nodes.begin(), nodes.end());
    auto plan = cache ? cache->get(*device_, nodes) : place_constraint(*device_, nodes);
    cost_.cnots += plan->circuit.cnot_count();
    for (const auto& g : plan->circuit.gates()) {
      if (!g.two_qubit()) continue;
      const std::size_t t = std::max(level[g.a], level[g.b]) + 1;
      level[g.a] = level[g.b] = t;
      cost_.depth = std::max(cost_.depth, t);
    }
    plans_.push_back(std::move(plan));
  }
}

std::optional<std::string> locality_violation(
    const ParityMap& map, const DeviceGraph& g, const Layout& layout) {
  const auto groups = polynomial_groups(map);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    std::set<NodeId> nodes;
    for (QubitId q : groups[k]) {
      const auto n = layout.node(q);
      if (!n) return "polynomial constraint " + std::to_string(k) + " has an unplaced qubit";
      nodes.insert(*n);
    }
    std::set<NodeId> reached{*nodes.begin()};
    std::deque<NodeId> queue{*nodes.begin()};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : g.neighbors(u)) {
        if (nodes.contains(v) && reached.insert(v).second) queue.push_back(v);
      }
    }
    if (reached.size() != nodes.size()) {
      return "polynomial constraint " + std::to_string(k) +
             " would no longer occupy connected device nodes";
    }
  }
  return std::nullopt;
}

CompilationState swap_move(const CompilationState& s, QubitId a, QubitId b,
                           SynthesisCache* cache) {
  if (a == b) return s;
  Layout layout = s.layout();
  layout.swap_qubits(a, b);
  if (auto reason = locality_violation(s.map(), s.device(), layout)) {
    throw LocalityError("swap rejected: " + *reason);
  }
  return CompilationState(s.map_ptr(), s.device_ptr(), std::move(layout), s.basis(), cache);
}

CompilationState relocate_move(const CompilationState& s, QubitId q, NodeId node,
                               SynthesisCache* cache) {
  Layout layout = s.layout();
  layout.relocate(q, node);
  if (auto reason = locality_violation(s.map(), s.device(), layout)) {
    throw LocalityError("relocation rejected: " + *reason);
  }
  return CompilationState(s.map_ptr(), s.device_ptr(), std::move(layout), s.basis(), cache);
}

CompilationState basis_move(const CompilationState& s, std::size_t i, std::size_t j,
                            SynthesisCache* cache) {
  ConstraintBasis basis = s.basis();
  auto& rows = basis.constraints;
  if (i == j || i >= rows.size() || j >= rows.size()) {
    throw std::invalid_argument("basis move needs two distinct existing rows");
  }
  std::vector<QubitId> sum;
  std::set_symmetric_difference(rows[i].qubits.begin(), rows[i].qubits.end(),
                                rows[j].qubits.begin(), rows[j].qubits.end(),
                                std::back_inserter(sum));
  rows[i] = Constraint{std::move(sum), rows[i].sign * rows[j].sign};
  return CompilationState(s.map_ptr(), s.device_ptr(), s.layout(), std::move(basis), cache);
}

Layout initial_layout(const ParityMap& map, const DeviceGraph& g,
                      const ConstraintBasis& basis) {
  Layout layout = grouped_layout(map, g);
  std::map<QubitId, std::map<QubitId, std::size_t>> affinity;
  for (const auto& c : basis.constraints) {
    for (QubitId a : c.qubits) {
      for (QubitId b : c.qubits) {
        if (a != b) ++affinity[a][b];
      }
    }
  }
  std::set<QubitId> rest;
  std::vector<QubitId> placed;
  for (QubitId q : map.physical_ids()) {
    if (layout.node(q)) {
      placed.push_back(q);
    } else {
      rest.insert(q);
    }
  }

  while (!rest.empty()) {
    QubitId next = *rest.begin();
    std::size_t best_score = 0;
    for (QubitId q : rest) {
      std::size_t score = 0;
      for (QubitId p : placed) {
        auto it = affinity[q].find(p);
        if (it != affinity[q].end()) score += it->second;
      }
      if (score > best_score) {
        best_score = score;
        next = q;
      }
    }
    NodeId best_node = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (NodeId n : layout.free_nodes()) {
      std::size_t cost = 0;
      if (best_score > 0) {
        for (auto [p, w] : affinity[next]) {
          if (auto pn = layout.node(p)) cost += w * g.distance(n, *pn);
        }
      } else if (!placed.empty()) {
        for (QubitId p : placed) cost += g.distance(n, layout.node_checked(p));
      } else {
        for (NodeId m = 0; m < g.size(); ++m) cost += g.distance(n, m);
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_node = n;
      }
    }
    layout.place(next, best_node);
    placed.push_back(next);
    rest.erase(next);
  }
  return layout;
}

nlohmann::json trace_to_json(const TraceEntry& e) {
  nlohmann::json j{{"restart", e.restart},
                   {"evaluation", e.evaluation},
                   {"move", e.move},
                   {"cnots", e.cost.cnots},
                   {"depth", e.cost.depth}};
  if (e.move != "start") {
    j["a"] = e.a;
    j["b"] = e.b;
  }
  return j;
}

SearchResult local_search(std::shared_ptr<const ParityMap> map,
                          std::shared_ptr<const DeviceGraph> device,
                          const ConstraintBasis& basis, const SearchOptions& options) {
  const Layout greedy = initial_layout(*map, *device, basis);
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);

  std::vector<std::future<RestartResult>> jobs;
  for (std::size_t r = 0; r < restarts; ++r) {
    const std::size_t share =
        options.budget / restarts + (r < options.budget % restarts ? 1 : 0);
    jobs.push_back(std::async(std::launch::async, run_restart, map, device,
                              std::cref(basis), std::cref(greedy), std::cref(options),
                              r, share));
  }
  std::vector<RestartResult> results;
  for (auto& job : jobs) results.push_back(job.get());

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (cost_less(results[r].best->cost(), results[best].best->cost(), options.order)) {
      best = r;
    }
  }
  SearchResult out{*results[best].best, results[0].trace.front().cost, best, 0, {}};
  for (auto& r : results) {
    out.evaluations += r.evaluations;
    out.trace.insert(out.trace.end(), r.trace.begin(), r.trace.end());
  }
  return out;
}

}  // namespace parity
