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
#include <string>
#include <vector>

namespace parity {

enum class GateKind { Cnot, Rz, Rx, H, Exchange };

/// A gate on wire indices. For Cnot, `a` is the control and `b` the target.
/// Exchange(theta) = exp(i theta (XX + YY) / 2) on (a, b).
struct Gate {
  GateKind kind = GateKind::Rz;
  std::size_t a = 0;
  std::size_t b = 0;
  double angle = 0.0;

  static Gate cnot(std::size_t control, std::size_t target);
  static Gate rz(std::size_t q, double theta) { return {GateKind::Rz, q, q, theta}; }
  static Gate rx(std::size_t q, double theta) { return {GateKind::Rx, q, q, theta}; }
  static Gate h(std::size_t q) { return {GateKind::H, q, q, 0.0}; }
  static Gate exchange(std::size_t a, std::size_t b, double theta);

  bool two_qubit() const { return kind == GateKind::Cnot || kind == GateKind::Exchange; }
  bool acts_on(std::size_t q) const { return a == q || (two_qubit() && b == q); }
  /// The gate undoing this one.
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list. Counts and depths are always computed from the gates.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<Gate> gates) : gates_(std::move(gates)) {}

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  void add(const Gate& g);
  void append(const Circuit& other);

  /// Free-form lines carried into emitted files as comments.
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string line) { notes_.push_back(std::move(line)); }

  /// One more than the largest wire index used; zero when empty.
  std::size_t width() const;
  std::size_t count(GateKind kind) const;
  std::size_t cnot_count() const { return count(GateKind::Cnot); }
  /// ASAP depth counting every gate.
  std::size_t depth() const;
  /// ASAP depth counting only two-qubit gates.
  std::size_t entangling_depth() const;

  /// Reversed gate order with every gate inverted.
  Circuit inverse() const;
  /// Reversed gate order, gates unchanged.
  Circuit reversed() const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.gates_ == b.gates_;
  }

 private:
  std::vector<Gate> gates_;
  std::vector<std::string> notes_;
};

struct Schedule {
  /// Time step of each gate, starting at 0. Skipped single-qubit gates
  /// share the step of the last counted gate on their wire.
  std::vector<std::size_t> step;
  std::size_t depth = 0;
};

/// Greedy as-soon-as-possible schedule keeping per-wire gate order. With
/// entangling_only, single-qubit gates are skipped and take no time.
Schedule schedule(const Circuit& c, bool entangling_only = false);

/// True when the two gates commute syntactically: disjoint wires, two
/// CNOTs that only share controls or only share targets, or two gates that
/// are diagonal on every shared wire.
bool gates_commute(const Gate& x, const Gate& y);

/// Reorders gates by list scheduling on the dependency graph of
/// non-commuting pairs, longest remaining chain first. The unitary is
/// unchanged; the result is returned only if it is not deeper under
/// entangling_depth.
Circuit compact_commuting(const Circuit& c);

}  // namespace parity
