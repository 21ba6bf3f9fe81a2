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

#include "parity/circuit.hpp"

namespace parity {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_angle(double value);

/// OpenQASM 2.0 subset: cx, rz, rx, h, plus an opaque two-qubit `exch`
/// gate. Circuit notes become `//` comment lines after the header.
std::string to_qasm(const Circuit& c, std::size_t n_qubits);

struct ParsedQasm {
  Circuit circuit;
  std::size_t n_qubits = 0;
};

/// Reads the subset written by to_qasm. Throws InputError on anything else.
ParsedQasm parse_qasm(const std::string& text);

}  // namespace parity
