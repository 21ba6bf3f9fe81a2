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


// parityc: compile HCBO problems to parity-encoded QAOA circuits.

#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parity/compiler.hpp"
#include "parity/device.hpp"
#include "parity/errors.hpp"
#include "parity/problem_io.hpp"
#include "parity/qasm.hpp"
#include "parity/steiner.hpp"

namespace fs = std::filesystem;
using namespace parity;

namespace {

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string("bad number '") + item + "' in " + what);
    }
  }
  return out;
}

struct CompileFlags {
  std::string problem;
  std::string device;
  std::uint64_t seed = 0;
  std::size_t budget = 10000;
  std::size_t restarts = 8;
  std::string cost = "cnot-first";
  std::string trace;
  std::size_t max_len = 4;
  std::size_t layers = 1;
  std::string gammas;
  std::string betas;
  std::string angles;
  std::string out = ".";
};

void add_compile_flags(CLI::App* cmd, CompileFlags& f) {
  cmd->add_option("--problem", f.problem, "problem JSON file")->required();
  cmd->add_option("--device", f.device, "device JSON file, chain:N or grid:WxH")->required();
  cmd->add_option("--seed", f.seed, "search seed");
  cmd->add_option("--budget", f.budget, "move evaluations per restart");
  cmd->add_option("--restarts", f.restarts, "number of search restarts");
  cmd->add_option("--cost", f.cost, "cost order")
      ->check(CLI::IsMember({"cnot-first", "depth-first"}));
  cmd->add_option("--trace", f.trace, "write accepted moves as JSON lines to this file");
  cmd->add_option("--max-constraint-len", f.max_len, "longest constraint in the basis")
      ->check(CLI::Range(3, 64));
  cmd->add_option("--layers", f.layers, "QAOA layers")->check(CLI::Range(1, 1000));
  cmd->add_option("--gamma", f.gammas, "comma-separated gammas, one per layer");
  cmd->add_option("--beta", f.betas, "comma-separated betas, one per layer");
  cmd->add_option("--constraint-angles", f.angles,
                  "per-layer constraint angles: a,b,...;c,d,...  (default -gamma)");
}

CompileOptions options_from(const CompileFlags& f) {
  CompileOptions o;
  o.max_constraint_len = f.max_len;
  o.search.seed = f.seed;
  o.search.budget = f.budget;
  o.search.restarts = f.restarts;
  o.search.order = f.cost == "depth-first" ? CostOrder::DepthFirst : CostOrder::CnotFirst;
  auto per_layer = [&](const std::string& text, double fallback, const char* what) {
    if (text.empty()) return std::vector<double>(f.layers, fallback);
    auto v = parse_list(text, what);
    if (v.size() == 1 && f.layers > 1) v.resize(f.layers, v.front());
    if (v.size() != f.layers) {
      throw InputError(std::string(what) + " needs one value per layer");
    }
    return v;
  };
  o.schedule.gammas = per_layer(f.gammas, 0.5, "--gamma");
  o.schedule.betas = per_layer(f.betas, 0.25, "--beta");
  if (!f.angles.empty()) {
    std::stringstream in(f.angles);
    std::string layer;
    while (std::getline(in, layer, ';')) {
      o.schedule.constraint_angles.push_back(parse_list(layer, "--constraint-angles"));
    }
  }
  return o;
}

Compilation run_compile(const CompileFlags& f, const CompileOptions& o) {
  const HcboProblem problem = load_problem(f.problem);
  auto device = std::make_shared<const DeviceGraph>(load_device(f.device));
  try {
    return compile_problem(problem, device, o);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int cmd_compile(const CompileFlags& f) {
  const CompileOptions o = options_from(f);
  const Compilation c = run_compile(f, o);
  const fs::path out(f.out);
  fs::create_directories(out);
  write_text_file_atomic(out / "circuit.qasm", to_qasm(c.circuit, c.device->size()));
  write_text_file_atomic(out / "report.json", c.report.dump(2) + "\n");
  write_text_file_atomic(out / "layout.json", c.layout.dump(2) + "\n");
  if (!f.trace.empty()) write_text_file_atomic(f.trace, trace_lines(c.search));
  const auto& t = c.report["totals"];
  std::cout << "constraints " << t["constraints"] << ", cnots " << t["cnots"] << ", depth "
            << t["depth"] << ", ancillas " << t["ancillas"] << "\n";
  return kExitOk;
}

int cmd_stats(const CompileFlags& f) {
  const CompileOptions o = options_from(f);
  const Compilation c = run_compile(f, o);
  if (!f.trace.empty()) write_text_file_atomic(f.trace, trace_lines(c.search));
  std::cout << c.report.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& circuit, const std::string& problem_path,
               const std::string& layout_path, double tol) {
  const HcboProblem problem = load_problem(problem_path);
  nlohmann::json layout;
  try {
    layout = nlohmann::json::parse(read_text_file(layout_path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("layout: ") + e.what());
  }
  const VerifyResult r = verify_compilation(read_text_file(circuit), problem, layout, tol);
  for (const auto& m : r.messages) std::cout << m << "\n";
  std::cout << (r.ok() ? "PASS" : "FAIL") << "\n";
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_steiner(const std::string& device_spec, const std::vector<NodeId>& terminals) {
  const DeviceGraph g = load_device(device_spec);
  for (NodeId t : terminals) {
    if (t >= g.size()) throw InputError("terminal " + std::to_string(t) + " is not a node");
  }
  const SteinerTree tree = steiner_tree(g, terminals);
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : tree.edges) edges.push_back({a, b});
  std::cout << nlohmann::json{{"terminals", tree.terminals},
                              {"nodes", tree.nodes},
                              {"edges", edges},
                              {"size", tree.size()},
                              {"terminal_span", terminal_span(tree)}}
                   .dump()
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parityc: parity-encoded QAOA compiler"};
  app.require_subcommand(1);

  CompileFlags compile_flags;
  auto* compile = app.add_subcommand("compile", "compile and write circuit.qasm, report.json, layout.json");
  add_compile_flags(compile, compile_flags);
  compile->add_option("--out", compile_flags.out, "output directory");

  CompileFlags stats_flags;
  auto* stats = app.add_subcommand("stats", "compile and print the report only");
  add_compile_flags(stats, stats_flags);

  std::string v_circuit, v_problem, v_layout;
  double v_tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "check a compiled circuit against its problem");
  verify->add_option("--circuit", v_circuit)->required();
  verify->add_option("--problem", v_problem)->required();
  verify->add_option("--layout", v_layout)->required();
  verify->add_option("--tol", v_tol);

  std::string s_device;
  std::vector<NodeId> s_terminals;
  auto* steiner = app.add_subcommand("steiner", "print the Steiner tree for a terminal set");
  steiner->add_option("--device", s_device)->required();
  steiner->add_option("--terminals", s_terminals)->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*compile) return cmd_compile(compile_flags);
    if (*stats) return cmd_stats(stats_flags);
    if (*verify) return cmd_verify(v_circuit, v_problem, v_layout, v_tol);
    return cmd_steiner(s_device, s_terminals);
  } catch (...) {
    return exit_code_for_current_exception(std::cerr);
  }
}
