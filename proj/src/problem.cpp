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


#include "parity/problem.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "parity/errors.hpp"

namespace parity {

namespace {

std::string describe(const SpinSet& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

void check_spin_set(const SpinSet& s, int n_spins, const std::string& what) {
  if (s.empty()) throw InputError(what + " has an empty spin set");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n_spins) {
      throw InputError(
          what + " " + describe(s) + " references spin " +
          std::to_string(s[i]) + " outside 1.." + std::to_string(n_spins));
    }
    if (i > 0 && s[i] <= s[i - 1]) {
      throw InputError(
          what + " " + describe(s) + " must list distinct spins in order");
    }
  }
}

}  // namespace

bool Constraint::contains(QubitId q) const {
  return std::binary_search(qubits.begin(), qubits.end(), q);
}

BitVector Constraint::to_bits(std::size_t width) const {
  BitVector v(width);
  for (QubitId q : qubits) v.set(q);
  return v;
}

Constraint Constraint::from_bits(const BitVector& bits, int sign) {
  Constraint c;
  c.qubits = bits.indices();
  c.sign = sign;
  return c;
}

SpinSet spins_from_bits(const BitVector& bits) {
  SpinSet s;
  for (std::size_t i : bits.indices()) s.push_back(static_cast<int>(i) + 1);
  return s;
}

BitVector spins_to_bits(const SpinSet& spins, int n_spins) {
  BitVector v(static_cast<std::size_t>(n_spins));
  for (int s : spins) v.flip(static_cast<std::size_t>(s - 1));
  return v;
}

std::optional<std::size_t> HcboProblem::find_term(const SpinSet& spins) const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].spins == spins) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> HcboProblem::polynomial_member_terms(
    std::size_t index) const {
  std::vector<std::size_t> out;
  for (const SpinSet& m : polynomial_constraints.at(index).members) {
    auto t = find_term(m);
    if (!t) {
      throw InputError(
          "polynomial constraint member " + describe(m) + " is not a term");
    }
    out.push_back(*t);
  }
  return out;
}

void HcboProblem::validate() const {
  if (n_spins < 0) throw InputError("n_spins must be non-negative");

  std::set<SpinSet> term_sets;
  for (const auto& t : terms) {
    check_spin_set(t.spins, n_spins, "term");
    if (!term_sets.insert(t.spins).second) {
      throw InputError("duplicate term " + describe(t.spins));
    }
  }

  std::set<SpinSet> product_sets;
  for (const auto& p : product_constraints) {
    check_spin_set(p.spins, n_spins, "product constraint");
    if (p.sign != 1 && p.sign != -1) {
      throw InputError("product constraint sign must be 1 or -1");
    }
    if (term_sets.count(p.spins)) {
      throw InputError(
          "product constraint " + describe(p.spins) + " coincides with a term");
    }
    if (!product_sets.insert(p.spins).second) {
      throw InputError("duplicate product constraint " + describe(p.spins));
    }
  }
  // Contradictory product constraints are reported by the resolver.
  ProductConstraintResolver resolver(*this);

  std::set<std::size_t> driven;
  for (std::size_t i = 0; i < polynomial_constraints.size(); ++i) {
    const auto& pc = polynomial_constraints[i];
    if (pc.members.empty()) {
      throw InputError("polynomial constraint without members");
    }
    for (const SpinSet& m : pc.members) check_spin_set(m, n_spins, "member");
    for (std::size_t t : polynomial_member_terms(i)) {
      if (!driven.insert(t).second) {
        throw InputError(
            "term " + describe(terms[t].spins) +
            " appears in more than one polynomial constraint");
      }
    }
    const int m = static_cast<int>(pc.members.size());
    if (pc.value < -m || pc.value > m || (pc.value + m) % 2 != 0) {
      throw InputError(
          "polynomial constraint value " + std::to_string(pc.value) +
          " is unreachable with " + std::to_string(m) + " members");
    }
    if (!pc.initial_bits.empty()) {
      if (pc.initial_bits.size() != pc.members.size()) {
        throw InputError("initial_bits must have one entry per member");
      }
      int sum = 0;
      for (int b : pc.initial_bits) {
        if (b != 0 && b != 1) throw InputError("initial_bits must be 0 or 1");
        sum += 1 - 2 * b;
      }
      if (sum != pc.value) {
        throw InputError("initial_bits do not satisfy the constraint value");
      }
    }
  }
}

ProductConstraintResolver::ProductConstraintResolver(const HcboProblem& problem)
    : n_spins_(static_cast<std::size_t>(problem.n_spins)) {
  const std::size_t m = problem.product_constraints.size();
  n_products_ = m;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& p = problem.product_constraints[j];
    BitVector row = spins_to_bits(p.spins, problem.n_spins);
    BitVector combo(m);
    combo.set(j);
    int sign = p.sign;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (row.get(pivots_[i])) {
        row ^= rows_[i];
        combo ^= combos_[i];
        sign *= signs_[i];
      }
    }
    if (row.none()) {
      if (sign != 1) {
        throw InputError("product constraints contradict each other");
      }
      continue;
    }
    const std::size_t pivot = row.first_set();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].get(pivot)) {
        rows_[i] ^= row;
        combos_[i] ^= combo;
        signs_[i] *= sign;
      }
    }
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    pivots_.push_back(pivot);
    signs_.push_back(sign);
  }
}

std::optional<int> ProductConstraintResolver::fixed_sign(
    const BitVector& spins) const {
  if (spins.size() != n_spins_) {
    throw std::invalid_argument("spin vector has the wrong length");
  }
  BitVector residual = spins;
  int sign = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (residual.get(pivots_[i])) {
      residual ^= rows_[i];
      sign *= signs_[i];
    }
  }
  if (residual.any()) return std::nullopt;
  return sign;
}

namespace {
HcboProblem validated(HcboProblem p) {
  p.validate();
  return p;
}
}  // namespace

std::optional<std::vector<std::size_t>> ProductConstraintResolver::decompose(
    const BitVector& spins) const {
  if (spins.size() != n_spins_) {
    throw std::invalid_argument("spin vector has the wrong length");
  }
  BitVector residual = spins;
  BitVector combo(n_products_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (residual.get(pivots_[i])) {
      residual ^= rows_[i];
      combo ^= combos_[i];
    }
  }
  if (residual.any()) return std::nullopt;
  return combo.indices();
}

ParityMap::ParityMap(HcboProblem problem)
    : problem_(validated(std::move(problem))), resolver_(problem_) {
  for (const auto& t : problem_.terms) {
    ParityQubit q;
    q.id = qubits_.size();
    q.label = t.spins;
    qubits_.push_back(q);
    spin_bits_.push_back(spins_to_bits(t.spins, problem_.n_spins));
  }
  for (const auto& p : problem_.product_constraints) {
    ParityQubit q;
    q.id = qubits_.size();
    q.label = p.spins;
    q.fixed_sign = p.sign;
    qubits_.push_back(q);
    spin_bits_.push_back(spins_to_bits(p.spins, problem_.n_spins));
  }
}

const ParityQubit& ParityMap::qubit(QubitId id) const {
  if (id >= qubits_.size()) {
    throw std::out_of_range("unknown parity qubit id " + std::to_string(id));
  }
  return qubits_[id];
}

const BitVector& ParityMap::spin_bits(QubitId id) const {
  qubit(id);
  return spin_bits_[id];
}

std::vector<QubitId> ParityMap::physical_ids() const {
  std::vector<QubitId> out;
  for (const auto& q : qubits_) {
    if (!q.is_virtual()) out.push_back(q.id);
  }
  return out;
}

QubitId ParityMap::add_ancilla(SpinSet label) {
  ParityQubit q;
  q.id = qubits_.size();
  q.label = std::move(label);
  q.is_ancilla = true;
  spin_bits_.push_back(spins_to_bits(q.label, problem_.n_spins));
  qubits_.push_back(std::move(q));
  return qubits_.back().id;
}

BitVector ParityMap::spin_parity(std::span<const QubitId> qubits) const {
  BitVector acc(static_cast<std::size_t>(problem_.n_spins));
  for (QubitId q : qubits) acc ^= spin_bits(q);
  return acc;
}

std::optional<int> ParityMap::constraint_sign(
    std::span<const QubitId> qubits) const {
  return resolver_.fixed_sign(spin_parity(qubits));
}

std::optional<std::vector<QubitId>> ParityMap::virtual_completion(
    std::span<const QubitId> qubits) const {
  auto combo = resolver_.decompose(spin_parity(qubits));
  if (!combo) return std::nullopt;
  std::vector<QubitId> out;
  for (std::size_t j : *combo) out.push_back(num_terms() + j);
  return out;
}

BitMatrix build_generator_matrix(const HcboProblem& problem) {
  const std::size_t k = problem.terms.size();
  BitMatrix g(static_cast<std::size_t>(problem.n_spins),
              k + problem.product_constraints.size());
  for (std::size_t j = 0; j < k; ++j) {
    for (int s : problem.terms[j].spins) g.set(static_cast<std::size_t>(s - 1), j);
  }
  for (std::size_t j = 0; j < problem.product_constraints.size(); ++j) {
    for (int s : problem.product_constraints[j].spins) {
      g.set(static_cast<std::size_t>(s - 1), k + j);
    }
  }
  return g;
}

BitMatrix target_constraint_space(const HcboProblem& problem) {
  return nullspace_basis(build_generator_matrix(problem));
}

Constraint fold_virtual_qubits(
    const Constraint& c, std::span<const ParityQubit> qubits) {
  Constraint out;
  out.sign = c.sign;
  for (QubitId q : c.qubits) {
    if (q >= qubits.size()) {
      throw std::out_of_range("unknown parity qubit id " + std::to_string(q));
    }
    if (qubits[q].is_virtual()) {
      out.sign *= *qubits[q].fixed_sign;
    } else {
      out.qubits.push_back(q);
    }
  }
  return out;
}

}  // namespace parity
