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


#include "parity/qasm.hpp"

#include <charconv>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "parity/errors.hpp"

namespace parity {

namespace {

double parse_angle(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("line " + std::to_string(line_no) + ": bad angle '" + text + "'");
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_angle(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("angle formatting failed");
  return std::string(buf, ptr);
}

std::string to_qasm(const Circuit& c, std::size_t n_qubits) {
  if (c.width() > n_qubits) throw std::invalid_argument("circuit wider than register");
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "opaque exch(theta) a,b;\n";
  for (const auto& note : c.notes()) out << "// " << note << "\n";
  out << "qreg q[" << n_qubits << "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Cnot:
        out << "cx q[" << g.a << "],q[" << g.b << "];\n";
        break;
      case GateKind::Rz:
        out << "rz(" << format_angle(g.angle) << ") q[" << g.a << "];\n";
        break;
      case GateKind::Rx:
        out << "rx(" << format_angle(g.angle) << ") q[" << g.a << "];\n";
        break;
      case GateKind::H:
        out << "h q[" << g.a << "];\n";
        break;
      case GateKind::Exchange:
        out << "exch(" << format_angle(g.angle) << ") q[" << g.a << "],q[" << g.b << "];\n";
        break;
    }
  }
  return out.str();
}

ParsedQasm parse_qasm(const std::string& text) {
  static const std::regex qreg(R"(qreg q\[(\d+)\];)");
  static const std::regex two(R"((cx|exch(?:\(([^)]*)\))?) q\[(\d+)\],q\[(\d+)\];)");
  static const std::regex one(R"((h|rz\(([^)]*)\)|rx\(([^)]*)\)) q\[(\d+)\];)");

  ParsedQasm out;
  bool have_register = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.starts_with("//")) {
      if (line.starts_with("// ")) out.circuit.add_note(line.substr(3));
      continue;
    }
    if (line == "OPENQASM 2.0;" || line == "include \"qelib1.inc\";" ||
        line == "opaque exch(theta) a,b;") {
      continue;
    }
    std::smatch m;
    if (std::regex_match(line, m, qreg)) {
      if (have_register) throw InputError("second qreg declaration");
      out.n_qubits = std::stoul(m[1]);
      have_register = true;
      continue;
    }
    if (!have_register) {
      throw InputError("line " + std::to_string(line_no) + ": gate before qreg");
    }
    auto wire = [&](const std::ssub_match& s) {
      const std::size_t q = std::stoul(s.str());
      if (q >= out.n_qubits) {
        throw InputError("line " + std::to_string(line_no) + ": wire out of range");
      }
      return q;
    };
    if (std::regex_match(line, m, two)) {
      const std::size_t a = wire(m[3]), b = wire(m[4]);
      if (a == b) throw InputError("line " + std::to_string(line_no) + ": repeated wire");
      if (m[1] == "cx") {
        out.circuit.add(Gate::cnot(a, b));
      } else if (m[2].matched) {
        out.circuit.add(Gate::exchange(a, b, parse_angle(m[2], line_no)));
      } else {
        throw InputError("line " + std::to_string(line_no) + ": exch needs an angle");
      }
      continue;
    }
    if (std::regex_match(line, m, one)) {
      const std::size_t q = wire(m[4]);
      if (m[1] == "h") {
        out.circuit.add(Gate::h(q));
      } else if (m[2].matched) {
        out.circuit.add(Gate::rz(q, parse_angle(m[2], line_no)));
      } else {
        out.circuit.add(Gate::rx(q, parse_angle(m[3], line_no)));
      }
      continue;
    }
    throw InputError("line " + std::to_string(line_no) + ": unsupported statement '" +
                     line + "'");
  }
  if (!have_register) throw InputError("missing qreg declaration");
  return out;
}

}  // namespace parity
