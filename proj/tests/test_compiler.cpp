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


#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <regex>
#include <sstream>

#include "parity/compiler.hpp"
#include "parity/errors.hpp"
#include "parity/qasm.hpp"
#include "test_support.hpp"

using namespace parity;

namespace {

Compilation compile(const std::string& problem, const std::string& device,
                    CompileOptions options = {}) {
  return compile_problem(testing_support::load(problem),
                         std::make_shared<const DeviceGraph>(load_device(device)), options);
}

std::string qasm_of(const Compilation& c) { return to_qasm(c.circuit, c.device->size()); }

int code_for(const std::function<void()>& f) {
  std::ostringstream err;
  try {
    f();
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
  return kExitOk;
}

}  // namespace

TEST_CASE("six-term example on a 3x3 grid") {
  const Compilation c = compile("six_term.json", "grid:3x3");
  const auto& r = c.report;
  CHECK(r["totals"]["constraints"] == 2);
  std::size_t sum = 0;
  for (const auto& pc : r["constraints"]) sum += pc["cnots"].get<std::size_t>();
  CHECK(r["totals"]["cnots"] == sum);
  CHECK(r["circuit"]["cx"] == sum);
  CHECK(r["totals"]["ancillas"] == 0);

  const VerifyResult v = verify_compilation(qasm_of(c), c.map->problem(), c.layout, 1e-9);
  CHECK(v.code_space_ok);
  CHECK(v.circuit_ok);
  CHECK(v.max_deviation < 1e-9);
}

TEST_CASE("four-spin example on a chain") {
  const Compilation c = compile("four_spin.json", "chain:8");
  CHECK(c.report["totals"]["cnots"].get<std::size_t>() <= 22);
  CHECK(c.report["swap_baseline"]["bridged_below_baseline"] == true);
  CHECK(c.report["swap_baseline"]["cnots"].get<std::size_t>() >
        c.report["totals"]["cnots"].get<std::size_t>());
  CHECK(verify_compilation(qasm_of(c), c.map->problem(), c.layout, 1e-9).ok());
}

TEST_CASE("reports are deterministic for a seed") {
  CompileOptions o;
  o.search.seed = 99;
  const Compilation a = compile("four_spin.json", "chain:8", o);
  const Compilation b = compile("four_spin.json", "chain:8", o);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.layout.dump() == b.layout.dump());
  CHECK(qasm_of(a) == qasm_of(b));
  CHECK(trace_lines(a.search) == trace_lines(b.search));
}

TEST_CASE("empty problem compiles to an empty circuit") {
  HcboProblem p;
  p.n_spins = 2;
  const Compilation c =
      compile_problem(p, std::make_shared<const DeviceGraph>(DeviceGraph::chain(2)), {});
  CHECK(c.circuit.empty());
  CHECK(c.report["totals"]["cnots"] == 0);
  CHECK(c.report["totals"]["depth"] == 0);
  CHECK(c.report["constraints"].empty());
}

TEST_CASE("verification catches perturbations") {
  const Compilation c = compile("six_term.json", "grid:3x3");
  const std::string qasm = qasm_of(c);
  const auto& problem = c.map->problem();

  const auto at = qasm.find("\ncx ");
  REQUIRE(at != std::string::npos);
  const std::string dropped = qasm.substr(0, at) + qasm.substr(qasm.find('\n', at + 1));
  CHECK_FALSE(verify_compilation(dropped, problem, c.layout, 1e-9).circuit_ok);

  // Nudge the first rotation angle by 1e-12.
  const std::regex first_rz(R"(rz\(([^)]+)\))");
  std::smatch m;
  REQUIRE(std::regex_search(qasm, m, first_rz));
  const double nudged = std::stod(m[1].str()) + 1e-12;
  const std::string tiny = m.prefix().str() + "rz(" + format_angle(nudged) + ")" + m.suffix().str();
  REQUIRE(tiny != qasm);
  CHECK(verify_compilation(tiny, problem, c.layout, 1e-9).ok());

  nlohmann::json moved = c.layout;
  std::swap(moved["qubits"][0]["node"], moved["qubits"][1]["node"]);
  CHECK_FALSE(verify_compilation(qasm, problem, moved, 1e-9).ok());

  nlohmann::json bad_basis = c.layout;
  bad_basis["constraints"][0]["sign"] = -1;
  CHECK_FALSE(verify_compilation(qasm, problem, bad_basis, 1e-9).code_space_ok);
}

TEST_CASE("verification refuses oversized circuits") {
  const Compilation c = compile("constrained.json", "grid:5x4");
  CHECK_THROWS_AS(verify_compilation(qasm_of(c), c.map->problem(), c.layout, 1e-9),
                  ResourceCapError);
}

TEST_CASE("malformed layout documents") {
  const Compilation c = compile("six_term.json", "grid:3x3");
  nlohmann::json broken = c.layout;
  broken.erase("schedule");
  CHECK_THROWS_AS(verify_compilation(qasm_of(c), c.map->problem(), broken, 1e-9), InputError);
  nlohmann::json wrong_term = c.layout;
  wrong_term["qubits"][0]["spins"] = {1, 3};
  CHECK_THROWS_AS(verify_compilation(qasm_of(c), c.map->problem(), wrong_term, 1e-9),
                  InputError);
}

TEST_CASE("exit codes by failure class") {
  CHECK(code_for([] { throw InputError("x"); }) == kExitInputError);
  CHECK(code_for([] { throw DisconnectedDeviceError("x"); }) == kExitDisconnectedDevice);
  CHECK(code_for([] { throw InfeasiblePlacementError("x"); }) == kExitInfeasiblePlacement);
  CHECK(code_for([] { throw LocalityError("x"); }) == kExitInfeasiblePlacement);
  CHECK(code_for([] { throw ResourceCapError("x"); }) == kExitResourceCap);
  CHECK(code_for([] { throw std::logic_error("x"); }) == kExitInternal);
  CHECK(code_for([] { compile("six_term.json", "chain:4"); }) == kExitInfeasiblePlacement);
}

TEST_CASE("multi-layer schedules and explicit constraint angles") {
  CompileOptions o;
  o.schedule = {{0.2, 0.4, 0.6}, {0.5, 0.3, 0.1}, {}};
  const Compilation c = compile("five_cycle.json", "grid:3x3", o);
  CHECK(c.report["circuit"]["layers"] == 3);
  CHECK(verify_compilation(qasm_of(c), c.map->problem(), c.layout, 1e-9).ok());

  CompileOptions bad;
  bad.schedule = {{0.2}, {0.5}, {{1.0, 2.0, 3.0}}};
  CHECK_THROWS_AS(compile("six_term.json", "grid:3x3", bad), std::invalid_argument);
}
