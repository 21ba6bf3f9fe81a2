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
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "parity/circuit.hpp"
#include "parity/device.hpp"
#include "parity/layout_optimizer.hpp"
#include "parity/problem.hpp"
#include "parity/qaoa.hpp"

namespace parity {

/// Process exit codes of the parityc tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInputError = 2,
  kExitInfeasiblePlacement = 3,
  kExitVerificationFailed = 4,
  kExitResourceCap = 5,
  kExitDisconnectedDevice = 6,
};

struct CompileOptions {
  std::size_t max_constraint_len = 4;
  SearchOptions search;
  QaoaSchedule schedule{{0.5}, {0.25}, {}};
};

struct Compilation {
  std::shared_ptr<const ParityMap> map;
  std::shared_ptr<const DeviceGraph> device;
  SearchResult search;
  Circuit circuit;
  nlohmann::json report;
  /// Everything verify needs besides the problem and the circuit.
  nlohmann::json layout;
};

/// problem model -> constraint basis -> layout search -> synthesis -> QAOA.
Compilation compile_problem(const HcboProblem& problem,
                            std::shared_ptr<const DeviceGraph> device,
                            const CompileOptions& options);

/// Per-constraint costs, totals, SWAP-baseline comparison, and search
/// summary. Key order is fixed, so equal inputs dump to equal text.
nlohmann::json make_report(const Compilation& c, const CompileOptions& options);

/// One JSON object per line for every trace entry of the search.
std::string trace_lines(const SearchResult& search);

struct VerifyResult {
  bool code_space_ok = false;
  bool circuit_ok = false;
  double max_deviation = 0.0;
  std::size_t wires = 0;
  std::vector<std::string> messages;
  bool ok() const { return code_space_ok && circuit_ok; }
};

/// Rebuilds the expected unitary from the problem and layout document,
/// independent of constraint synthesis, and compares it to the circuit on
/// the wires the circuit touches. Throws ResourceCapError above the oracle
/// cap and InputError on malformed documents.
VerifyResult verify_compilation(const std::string& qasm, const HcboProblem& problem,
                                const nlohmann::json& layout, double tol);

/// Maps any exception thrown by the pipeline to an exit code and writes
/// a one-line message to `err`.
int exit_code_for_current_exception(std::ostream& err);

}  // namespace parity
