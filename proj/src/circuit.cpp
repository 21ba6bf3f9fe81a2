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


#include "parity/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace parity {

namespace {

enum class WireAction { Diagonal, Flip, Other };

WireAction action_on(const Gate& g, std::size_t q) {
  switch (g.kind) {
    case GateKind::Rz:
      return WireAction::Diagonal;
    case GateKind::Rx:
      return WireAction::Flip;
    case GateKind::Cnot:
      return q == g.a ? WireAction::Diagonal : WireAction::Flip;
    default:
      return WireAction::Other;
  }
}

std::vector<std::size_t> wires(const Gate& g) {
  if (g.two_qubit()) return {g.a, g.b};
  return {g.a};
}

}  // namespace

Gate Gate::cnot(std::size_t control, std::size_t target) {
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  return {GateKind::Cnot, control, target, 0.0};
}

Gate Gate::exchange(std::size_t a, std::size_t b, double theta) {
  if (a == b) throw std::invalid_argument("exchange gate needs two wires");
  return {GateKind::Exchange, a, b, theta};
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind != GateKind::Cnot && kind != GateKind::H) g.angle = -angle;
  return g;
}

void Circuit::add(const Gate& g) {
  if (g.two_qubit() && g.a == g.b) throw std::invalid_argument("two-qubit gate on one wire");
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::size_t Circuit::width() const {
  std::size_t w = 0;
  for (const auto& g : gates_) {
    w = std::max(w, g.a + 1);
    if (g.two_qubit()) w = std::max(w, g.b + 1);
  }
  return w;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::depth() const { return schedule(*this, false).depth; }

std::size_t Circuit::entangling_depth() const { return schedule(*this, true).depth; }

Circuit Circuit::inverse() const {
  Circuit out;
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.add(it->inverse());
  return out;
}

Circuit Circuit::reversed() const {
  return Circuit(std::vector<Gate>(gates_.rbegin(), gates_.rend()));
}

Schedule schedule(const Circuit& c, bool entangling_only) {
  Schedule out;
  std::vector<std::size_t> level(c.width(), 0);
  for (const auto& g : c.gates()) {
    if (entangling_only && !g.two_qubit()) {
      out.step.push_back(level[g.a] == 0 ? 0 : level[g.a] - 1);
      continue;
    }
    std::size_t t = level[g.a];
    if (g.two_qubit()) t = std::max(t, level[g.b]);
    out.step.push_back(t);
    level[g.a] = t + 1;
    if (g.two_qubit()) level[g.b] = t + 1;
    out.depth = std::max(out.depth, t + 1);
  }
  return out;
}

bool gates_commute(const Gate& x, const Gate& y) {
  for (std::size_t q : wires(x)) {
    if (!y.acts_on(q)) continue;
    const WireAction ax = action_on(x, q), ay = action_on(y, q);
    if (ax == WireAction::Other || ax != ay) return false;
  }
  return true;
}

Circuit compact_commuting(const Circuit& c) {
  const auto& gates = c.gates();
  const std::size_t n = gates.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> n_pred(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!gates_commute(gates[i], gates[j])) {
        succ[i].push_back(j);
        ++n_pred[j];
      }
    }
  }
  std::vector<std::size_t> height(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j : succ[i]) height[i] = std::max(height[i], height[j] + 1);
  }

  std::vector<std::size_t> step(n, 0);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (n_pred[i] == 0) ready.push_back(i);
  }
  std::size_t scheduled = 0;
  for (std::size_t t = 0; scheduled < n; ++t) {
    std::sort(ready.begin(), ready.end(), [&](std::size_t a, std::size_t b) {
      if (height[a] != height[b]) return height[a] > height[b];
      return a < b;
    });
    std::vector<bool> busy(c.width(), false);
    std::vector<std::size_t> taken, waiting;
    for (std::size_t i : ready) {
      const auto w = wires(gates[i]);
      const bool free = std::none_of(w.begin(), w.end(), [&](std::size_t q) { return busy[q]; });
      if (!free) {
        waiting.push_back(i);
        continue;
      }
      for (std::size_t q : w) busy[q] = true;
      step[i] = t;
      taken.push_back(i);
    }
    scheduled += taken.size();
    ready = std::move(waiting);
    for (std::size_t i : taken) {
      for (std::size_t j : succ[i]) {
        if (--n_pred[j] == 0) ready.push_back(j);
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return step[a] < step[b]; });
  Circuit out;
  for (std::size_t i : order) out.add(gates[i]);
  for (const auto& note : c.notes()) out.add_note(note);
  if (out.entangling_depth() > c.entangling_depth()) return c;
  return out;
}

}  // namespace parity
