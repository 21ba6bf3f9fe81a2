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


// Exhaustive GF(2) reference: enumerates every vector instead of eliminating.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

/// Columns of the generator matrix as spin bitmasks (bit i is spin i+1).
using Columns = std::vector<std::uint32_t>;

/// Every subset mask x of the columns whose spins cancel, i.e. G x = 0.
inline std::set<std::uint32_t> kernel_by_enumeration(const Columns& cols) {
  std::set<std::uint32_t> out;
  const std::uint32_t n = static_cast<std::uint32_t>(cols.size());
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    std::uint32_t acc = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      if ((x >> k) & 1U) acc ^= cols[k];
    }
    if (acc == 0) out.insert(x);
  }
  return out;
}

/// All xor combinations of `rows`.
inline std::set<std::uint32_t> span_by_enumeration(const std::vector<std::uint32_t>& rows) {
  std::set<std::uint32_t> out{0};
  for (std::uint32_t r : rows) {
    std::set<std::uint32_t> next = out;
    for (std::uint32_t v : out) next.insert(v ^ r);
    out = std::move(next);
  }
  return out;
}

/// Every logical index occurs an even number of times in the product.
inline bool even_parity(const Columns& cols, const std::vector<std::size_t>& subset) {
  std::vector<int> count(32, 0);
  for (std::size_t k : subset) {
    for (int i = 0; i < 32; ++i) count[i] += (cols[k] >> i) & 1U;
  }
  for (int c : count) {
    if (c % 2 != 0) return false;
  }
  return true;
}

}  // namespace oracle
