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


#include "parity/constraint_basis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace parity {

namespace {

/// Row space grown one vector at a time, kept fully reduced.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t width) : width_(width) {}

  BitVector reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (v.get(pivots_[i])) v ^= rows_[i];
    }
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Adds v; returns false when it was already in the span.
  bool add(const BitVector& v) {
    BitVector r = reduce(v);
    if (r.none()) return false;
    const std::size_t pivot = r.first_set();
    for (auto& row : rows_) {
      if (row.get(pivot)) row ^= r;
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

bool shorter_then_lex(const Constraint& a, const Constraint& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.qubits < b.qubits;
}

Constraint signed_constraint(std::vector<QubitId> qubits, const ParityMap& map) {
  std::sort(qubits.begin(), qubits.end());
  auto sign = map.constraint_sign(qubits);
  if (!sign) {
    throw std::logic_error("qubit set does not form a code-space constraint");
  }
  return Constraint{std::move(qubits), *sign};
}

}  // namespace

bool is_valid_constraint(std::span<const QubitId> qubits, const ParityMap& map) {
  std::set<QubitId> seen;
  for (QubitId q : qubits) {
    if (q >= map.size()) {
      throw std::invalid_argument("unknown parity qubit id " + std::to_string(q));
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument(
          "parity qubit " + std::to_string(q) + " repeated in constraint");
    }
  }
  return map.spin_parity(qubits).none();
}

std::vector<Constraint> enumerate_short_constraints(
    const ParityMap& map, std::size_t max_len) {
  if (max_len < 2) throw std::invalid_argument("max_len must be at least 2");
  const std::size_t k = map.num_terms();
  const bool has_products = map.num_virtual() > 0;
  std::vector<Constraint> out;
  std::vector<QubitId> chosen;

  auto visit = [&](auto&& self, QubitId next, const BitVector& parity) -> void {
    for (QubitId q = next; q < k; ++q) {
      BitVector p = parity ^ map.spin_bits(q);
      chosen.push_back(q);
      if (chosen.size() >= 2) {
        if (p.none()) {
          if (is_valid_constraint(chosen, map)) out.push_back({chosen, 1});
        } else if (has_products) {
          if (auto extra = map.virtual_completion(chosen)) {
            Constraint full{chosen, 1};
            full.qubits.insert(full.qubits.end(), extra->begin(), extra->end());
            if (is_valid_constraint(full.qubits, map)) {
              out.push_back(fold_virtual_qubits(full, map.qubits()));
            }
          }
        }
      }
      if (chosen.size() < max_len) self(self, q + 1, p);
      chosen.pop_back();
    }
  };
  visit(visit, 0, BitVector(static_cast<std::size_t>(map.problem().n_spins)));
  return out;
}

BasisGrowth grow_short_basis(
    const BitMatrix& target, std::span<const Constraint> candidates) {
  const std::size_t width = target.cols();
  IncrementalSpan target_span(width);
  for (const auto& row : target.row_vectors()) target_span.add(row);

  std::vector<Constraint> ordered(candidates.begin(), candidates.end());
  std::stable_sort(ordered.begin(), ordered.end(), shorter_then_lex);

  BasisGrowth out{{}, BitMatrix(0, width)};
  IncrementalSpan basis_span(width);
  for (const auto& c : ordered) {
    if (basis_span.dimension() == target_span.dimension()) break;
    const BitVector bits = c.to_bits(width);
    if (!target_span.contains(bits)) continue;
    if (basis_span.add(bits)) out.basis.push_back(c);
  }
  const BitMatrix canonical = canonical_form(target);
  for (const auto& row : canonical.row_vectors()) {
    if (basis_span.add(row)) out.uncovered.append_row(row);
  }
  return out;
}

ConstraintChain break_long_constraint(
    const Constraint& c, std::size_t max_len, ParityMap& map,
    std::span<const QubitId> order) {
  if (c.size() <= max_len) return {{c}, {}};
  if (max_len < 3) {
    throw std::invalid_argument(
        "constraints can only be chained with max_len >= 3");
  }
  std::vector<QubitId> sequence;
  if (order.empty()) {
    sequence = c.qubits;
    std::sort(sequence.begin(), sequence.end());
  } else {
    sequence.assign(order.begin(), order.end());
    std::vector<QubitId> a = sequence, b = c.qubits;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw std::invalid_argument("chunk order must list the constraint's qubits");
    }
  }

  ConstraintChain chain;
  std::size_t pos = 0;
  std::optional<QubitId> link;
  BitVector carried(static_cast<std::size_t>(map.problem().n_spins));
  while (pos < sequence.size()) {
    const std::size_t remaining = sequence.size() - pos;
    const std::size_t room = link ? max_len - 1 : max_len;
    std::vector<QubitId> members;
    if (link) members.push_back(*link);
    if (remaining <= room) {
      members.insert(members.end(), sequence.begin() + pos, sequence.end());
      pos = sequence.size();
    } else {
      const std::size_t take = room - 1;
      for (std::size_t i = 0; i < take; ++i) {
        carried ^= map.spin_bits(sequence[pos + i]);
      }
      members.insert(
          members.end(), sequence.begin() + pos, sequence.begin() + pos + take);
      pos += take;
      const QubitId ancilla = map.add_ancilla(spins_from_bits(carried));
      chain.ancillas.push_back(ancilla);
      members.push_back(ancilla);
      link = ancilla;
    }
    chain.constraints.push_back(signed_constraint(std::move(members), map));
  }
  return chain;
}

BitMatrix physical_target_space(const ParityMap& map) {
  const BitMatrix full = target_constraint_space(map.problem());
  const std::size_t width = full.cols();
  BitMatrix folded(0, width);
  for (const auto& row : full.row_vectors()) {
    Constraint c = fold_virtual_qubits(Constraint::from_bits(row), map.qubits());
    folded.append_row(c.to_bits(width));
  }
  return canonical_form(folded);
}

BitMatrix eliminate_ancillas(
    std::span<const Constraint> constraints, const ParityMap& map) {
  const std::size_t base = map.num_terms() + map.num_virtual();
  const std::size_t n_anc = map.size() - base;
  // Ancilla columns first, so rows pivoting past them are ancilla-free.
  auto column = [&](QubitId q) { return q >= base ? q - base : q + n_anc; };
  BitMatrix m(0, n_anc + base);
  for (const auto& c : constraints) {
    BitVector v(n_anc + base);
    for (QubitId q : c.qubits) v.set(column(q));
    m.append_row(std::move(v));
  }
  const RowReduction rr = row_reduce(m);
  BitMatrix out(0, base);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] < n_anc) continue;
    BitVector v(base);
    for (std::size_t col : rr.reduced.row(i).indices()) v.set(col - n_anc);
    out.append_row(std::move(v));
  }
  return canonical_form(out);
}

ConstraintBasis build_constraint_basis(ParityMap& map, std::size_t max_len) {
  const BitMatrix target = physical_target_space(map);
  const std::size_t width = target.cols();
  const auto candidates = enumerate_short_constraints(map, max_len);
  BasisGrowth growth = grow_short_basis(target, candidates);

  ConstraintBasis out;
  out.constraints = growth.basis;
  std::vector<BitVector> reducers;
  for (const auto& c : growth.basis) reducers.push_back(c.to_bits(width));

  for (BitVector row : growth.uncovered.row_vectors()) {
    // Shorten with already chosen ancilla-free constraints before chaining.
    bool improved = true;
    while (improved) {
      improved = false;
      for (const auto& r : reducers) {
        BitVector candidate = row ^ r;
        if (candidate.popcount() < row.popcount()) {
          row = std::move(candidate);
          improved = true;
        }
      }
    }
    reducers.push_back(row);
    Constraint c = signed_constraint(row.indices(), map);
    ConstraintChain chain = break_long_constraint(c, max_len, map);
    for (auto& piece : chain.constraints) out.constraints.push_back(std::move(piece));
    for (QubitId a : chain.ancillas) out.ancillas.push_back(a);
  }
  return out;
}

}  // namespace parity
