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


#include "parity/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <set>

#include "parity/constraint_basis.hpp"
#include "parity/errors.hpp"
#include "parity/oracle.hpp"
#include "parity/problem_io.hpp"
#include "parity/qasm.hpp"
#include "parity/synthesis.hpp"

namespace parity {

namespace {

const char* order_name(CostOrder order) {
  return order == CostOrder::CnotFirst ? "cnot-first" : "depth-first";
}

nlohmann::json cost_json(const Cost& c) { return {{"cnots", c.cnots}, {"depth", c.depth}}; }

nlohmann::json layout_document(const CompilationState& s, const QaoaSchedule& schedule) {
  nlohmann::json qubits = nlohmann::json::array();
  for (QubitId q : s.map().physical_ids()) {
    const auto& pq = s.map().qubit(q);
    qubits.push_back({{"id", q},
                      {"spins", pq.label},
                      {"ancilla", pq.is_ancilla},
                      {"node", s.layout().node_checked(q)}});
  }
  nlohmann::json constraints = nlohmann::json::array();
  for (const auto& c : s.basis().constraints) {
    constraints.push_back({{"qubits", c.qubits}, {"sign", c.sign}});
  }
  nlohmann::json angles = nlohmann::json::array();
  for (std::size_t l = 0; l < schedule.layers(); ++l) {
    nlohmann::json layer = nlohmann::json::array();
    for (std::size_t c = 0; c < s.basis().constraints.size(); ++c) {
      layer.push_back(schedule.constraint_angle(l, c));
    }
    angles.push_back(std::move(layer));
  }
  return {{"wires", s.device().size()},
          {"device", device_to_json(s.device())},
          {"qubits", qubits},
          {"constraints", constraints},
          {"schedule",
           {{"gammas", schedule.gammas},
            {"betas", schedule.betas},
            {"constraint_angles", angles}}}};
}

template <typename T>
T field(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("layout document lacks '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("layout field '") + key + "': " + e.what());
  }
}

}  // namespace

Compilation compile_problem(const HcboProblem& problem,
                            std::shared_ptr<const DeviceGraph> device,
                            const CompileOptions& options) {
  auto map = std::make_shared<ParityMap>(problem);
  ConstraintBasis basis = build_constraint_basis(*map, options.max_constraint_len);
  options.schedule.validate(basis.constraints.size());
  std::shared_ptr<const ParityMap> frozen = map;

  Compilation out{frozen, device,
                  local_search(frozen, device, basis, options.search), {}, {}, {}};
  out.circuit = assemble(out.search.best, options.schedule);
  out.layout = layout_document(out.search.best, options.schedule);
  out.report = make_report(out, options);
  return out;
}

nlohmann::json make_report(const Compilation& c, const CompileOptions& options) {
  const CompilationState& s = c.search.best;
  nlohmann::json per_constraint = nlohmann::json::array();
  std::size_t total_cnots = 0, swap_cnots = 0;
  Circuit swap_layer;
  for (std::size_t i = 0; i < s.basis().constraints.size(); ++i) {
    const auto& con = s.basis().constraints[i];
    const auto& plan = *s.plans()[i];
    const Circuit swap = synth_swap_baseline(s.device(), plan.nodes, 1.0);
    nlohmann::json labels = nlohmann::json::array();
    for (QubitId q : con.qubits) labels.push_back(s.map().qubit(q).label);
    per_constraint.push_back({{"qubits", con.qubits},
                              {"labels", labels},
                              {"sign", con.sign},
                              {"nodes", plan.nodes},
                              {"tree_nodes", plan.tree.nodes},
                              {"tree_size", plan.tree.size()},
                              {"bridged_qubits", plan.tree.nodes.size() - plan.nodes.size()},
                              {"cnots", plan.circuit.cnot_count()},
                              {"depth", plan.circuit.entangling_depth()},
                              {"swap_baseline_cnots", swap.cnot_count()},
                              {"swap_baseline_depth", swap.entangling_depth()}});
    total_cnots += plan.circuit.cnot_count();
    swap_cnots += swap.cnot_count();
    swap_layer.append(swap);
  }

  std::size_t accepted = 0;
  for (const auto& e : c.search.trace) accepted += e.move != "start" ? 1 : 0;

  const Circuit& circ = c.circuit;
  return {
      {"device", {{"name", s.device().name()}, {"nodes", s.device().size()},
                  {"edges", s.device().edges().size()}}},
      {"problem", {{"n_spins", s.map().problem().n_spins},
                   {"terms", s.map().num_terms()},
                   {"product_constraints", s.map().num_virtual()},
                   {"polynomial_constraints",
                    s.map().problem().polynomial_constraints.size()}}},
      {"constraints", per_constraint},
      {"totals", {{"cnots", total_cnots},
                  {"depth", s.cost().depth},
                  {"constraints", s.basis().constraints.size()},
                  {"ancillas", s.map().num_ancillas()},
                  {"placed_qubits", s.map().physical_ids().size()}}},
      {"swap_baseline", {{"cnots", swap_cnots},
                         {"depth", swap_layer.entangling_depth()},
                         {"bridged_cnots", total_cnots},
                         {"bridged_below_baseline", total_cnots < swap_cnots},
                         {"note", "each SWAP is three CNOTs; no gates cancelled"}}},
      {"optimization", {{"seed", options.search.seed},
                        {"budget", options.search.budget},
                        {"restarts", options.search.restarts},
                        {"cost_order", order_name(options.search.order)},
                        {"max_constraint_len", options.max_constraint_len},
                        {"initial", cost_json(c.search.initial_cost)},
                        {"final", cost_json(s.cost())},
                        {"best_restart", c.search.best_restart},
                        {"evaluations", c.search.evaluations},
                        {"accepted_moves", accepted}}},
      {"circuit", {{"layers", options.schedule.layers()},
                   {"gates", circ.size()},
                   {"cx", circ.cnot_count()},
                   {"rz", circ.count(GateKind::Rz)},
                   {"rx", circ.count(GateKind::Rx)},
                   {"h", circ.count(GateKind::H)},
                   {"exch", circ.count(GateKind::Exchange)},
                   {"depth", circ.depth()},
                   {"entangling_depth", circ.entangling_depth()}}},
      {"notes", {"constraint rotations default to -gamma per layer",
                 "exchange drivers are a first-order product over sorted device edges"}}};
}

std::string trace_lines(const SearchResult& search) {
  std::string out;
  for (const auto& e : search.trace) out += trace_to_json(e).dump() + "\n";
  return out;
}

VerifyResult verify_compilation(const std::string& qasm, const HcboProblem& problem,
                                const nlohmann::json& layout, double tol) {
  VerifyResult out;
  ParityMap map(problem);
  std::map<QubitId, NodeId> node_of;
  for (const auto& entry : field<nlohmann::json>(layout, "qubits")) {
    const auto id = field<QubitId>(entry, "id");
    const auto spins = field<SpinSet>(entry, "spins");
    if (field<bool>(entry, "ancilla")) {
      if (map.add_ancilla(spins) != id) throw InputError("ancilla ids are not consecutive");
    } else if (id >= map.num_terms() || map.qubit(id).label != spins) {
      throw InputError("layout qubit " + std::to_string(id) + " does not match the problem");
    }
    node_of[id] = field<NodeId>(entry, "node");
  }
  for (QubitId q : map.physical_ids()) {
    if (!node_of.contains(q)) throw InputError("layout leaves qubit " + std::to_string(q) + " unplaced");
  }

  ConstraintBasis basis;
  for (const auto& entry : field<nlohmann::json>(layout, "constraints")) {
    Constraint c{field<std::vector<QubitId>>(entry, "qubits"), field<int>(entry, "sign")};
    for (QubitId q : c.qubits) {
      if (!node_of.contains(q)) throw InputError("constraint names an unplaced qubit");
    }
    basis.constraints.push_back(std::move(c));
  }
  for (QubitId q = 0; q < map.size(); ++q) {
    if (map.qubit(q).is_ancilla) basis.ancillas.push_back(q);
  }
  if (problem.n_spins <= static_cast<int>(kMaxOracleQubits)) {
    const CodeSpaceReport code = check_code_space(map, basis);
    out.code_space_ok = code.ok;
    out.messages.push_back("code space: " + code.detail);
  } else {
    throw ResourceCapError("code-space check needs at most " +
                           std::to_string(kMaxOracleQubits) + " spins");
  }

  const DeviceGraph device = device_from_json(field<nlohmann::json>(layout, "device"));
  const auto sched = field<nlohmann::json>(layout, "schedule");
  const auto gammas = field<std::vector<double>>(sched, "gammas");
  const auto betas = field<std::vector<double>>(sched, "betas");
  const auto angles = field<std::vector<std::vector<double>>>(sched, "constraint_angles");
  if (betas.size() != gammas.size() || angles.size() != gammas.size()) {
    throw InputError("layout schedule lists differ in length");
  }

  const ParsedQasm parsed = parse_qasm(qasm);
  std::set<NodeId> used;
  for (auto [q, n] : node_of) used.insert(n);
  for (const auto& g : parsed.circuit.gates()) {
    used.insert(g.a);
    if (g.two_qubit()) used.insert(g.b);
  }
  if (used.size() > kMaxOracleQubits) {
    throw ResourceCapError("circuit touches " + std::to_string(used.size()) +
                           " wires; the oracle stops at " + std::to_string(kMaxOracleQubits));
  }
  std::map<NodeId, std::size_t> wire;
  for (NodeId n : used) wire.emplace(n, wire.size());
  out.wires = wire.size();
  auto remap = [&](Gate g) {
    g.a = wire.at(g.a);
    if (g.two_qubit()) g.b = wire.at(g.b);
    return g;
  };
  Circuit compact;
  for (const auto& g : parsed.circuit.gates()) compact.add(remap(g));

  std::set<QubitId> grouped;
  std::vector<std::set<NodeId>> group_nodes;
  for (std::size_t k = 0; k < problem.polynomial_constraints.size(); ++k) {
    group_nodes.emplace_back();
    for (std::size_t t : problem.polynomial_member_terms(k)) {
      grouped.insert(t);
      group_nodes.back().insert(node_of.at(t));
    }
  }

  DenseUnitary expected(wire.size());
  for (QubitId q : map.physical_ids()) {
    if (!grouped.contains(q)) expected.apply(Gate::h(wire.at(node_of.at(q))));
  }
  for (std::size_t k = 0; k < problem.polynomial_constraints.size(); ++k) {
    const auto& bits = problem.polynomial_constraints[k].initial_bits;
    const auto members = problem.polynomial_member_terms(k);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == 1) expected.apply(Gate::rx(wire.at(node_of.at(members[i])), std::numbers::pi));
    }
  }
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    if (angles[l].size() != basis.constraints.size()) {
      throw InputError("constraint angle count differs from constraint count");
    }
    for (std::size_t x = 0; x < expected.dim(); ++x) {
      auto z = [&](QubitId q) { return ((x >> wire.at(node_of.at(q))) & 1U) ? -1.0 : 1.0; };
      double phase = 0.0;
      for (QubitId k = 0; k < problem.terms.size(); ++k) {
        phase += gammas[l] * problem.terms[k].coefficient * z(k);
      }
      for (std::size_t c = 0; c < basis.constraints.size(); ++c) {
        double prod = basis.constraints[c].sign;
        for (QubitId q : basis.constraints[c].qubits) prod *= z(q);
        phase += angles[l][c] * prod;
      }
      const Amplitude factor = std::polar(1.0, phase);
      for (std::size_t col = 0; col < expected.dim(); ++col) expected.at(x, col) *= factor;
    }
    for (QubitId q : map.physical_ids()) {
      if (!grouped.contains(q)) expected.apply(Gate::rx(wire.at(node_of.at(q)), -2.0 * betas[l]));
    }
    for (const auto& nodes : group_nodes) {
      for (auto [a, b] : device.edges()) {
        if (nodes.contains(a) && nodes.contains(b)) {
          expected.apply(Gate::exchange(wire.at(a), wire.at(b), betas[l]));
        }
      }
    }
  }

  const Equivalence eq = assert_equiv(circuit_unitary(compact, wire.size()), expected, tol);
  out.circuit_ok = eq.equivalent;
  out.max_deviation = eq.max_deviation;
  std::ostringstream msg;
  msg << "circuit: max deviation " << std::scientific << std::setprecision(3)
      << eq.max_deviation << " on " << wire.size() << " wires";
  out.messages.push_back(msg.str());
  return out;
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const DisconnectedDeviceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDisconnectedDevice;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InfeasiblePlacementError& e) {
    err << "infeasible placement: " << e.what() << "\n";
    return kExitInfeasiblePlacement;
  } catch (const LocalityError& e) {
    err << "infeasible placement: " << e.what() << "\n";
    return kExitInfeasiblePlacement;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace parity
