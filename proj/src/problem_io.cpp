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


#include "parity/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "parity/errors.hpp"

namespace parity {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(where + ": missing field '" + key + "'");
  }
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw InputError(where + ": expected an integer");
  }
  return v.get<int>();
}

SpinSet parse_spins(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of spins");
  SpinSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError(where + ": repeated spin index");
  }
  return s;
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw InputError(where + ": unknown field '" + key + "'");
    }
  }
}

}  // namespace

HcboProblem problem_from_json(const json& doc) {
  check_keys(doc,
             {"n_spins", "terms", "product_constraints",
              "polynomial_constraints", "name", "description"},
             "problem");
  HcboProblem p;
  p.n_spins = as_int(require(doc, "n_spins", "problem"), "n_spins");

  const json& terms = require(doc, "terms", "problem");
  if (!terms.is_array()) throw InputError("terms: expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    check_keys(terms[i], {"spins", "coefficient"}, where);
    LogicalTerm t;
    t.spins = parse_spins(require(terms[i], "spins", where), where + ".spins");
    const json& c = require(terms[i], "coefficient", where);
    if (!c.is_number()) throw InputError(where + ".coefficient: expected a number");
    t.coefficient = c.get<double>();
    p.terms.push_back(std::move(t));
  }

  if (auto it = doc.find("product_constraints"); it != doc.end()) {
    if (!it->is_array()) throw InputError("product_constraints: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "product_constraints[" + std::to_string(i) + "]";
      const json& pc = (*it)[i];
      check_keys(pc, {"spins", "sign"}, where);
      ProductConstraint c;
      c.spins = parse_spins(require(pc, "spins", where), where + ".spins");
      c.sign = as_int(require(pc, "sign", where), where + ".sign");
      p.product_constraints.push_back(std::move(c));
    }
  }

  if (auto it = doc.find("polynomial_constraints"); it != doc.end()) {
    if (!it->is_array()) {
      throw InputError("polynomial_constraints: expected an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where =
          "polynomial_constraints[" + std::to_string(i) + "]";
      const json& pc = (*it)[i];
      check_keys(pc, {"members", "value", "initial_bits"}, where);
      PolynomialConstraint c;
      const json& members = require(pc, "members", where);
      if (!members.is_array()) throw InputError(where + ".members: expected an array");
      for (std::size_t m = 0; m < members.size(); ++m) {
        c.members.push_back(parse_spins(
            members[m], where + ".members[" + std::to_string(m) + "]"));
      }
      c.value = as_int(require(pc, "value", where), where + ".value");
      if (auto bits = pc.find("initial_bits"); bits != pc.end()) {
        if (!bits->is_array()) throw InputError(where + ".initial_bits: expected an array");
        for (const auto& b : *bits) c.initial_bits.push_back(as_int(b, where + ".initial_bits"));
      }
      p.polynomial_constraints.push_back(std::move(c));
    }
  }

  p.validate();
  return p;
}

json problem_to_json(const HcboProblem& p) {
  json doc;
  doc["n_spins"] = p.n_spins;
  doc["terms"] = json::array();
  for (const auto& t : p.terms) {
    doc["terms"].push_back({{"spins", t.spins}, {"coefficient", t.coefficient}});
  }
  doc["product_constraints"] = json::array();
  for (const auto& c : p.product_constraints) {
    doc["product_constraints"].push_back({{"spins", c.spins}, {"sign", c.sign}});
  }
  doc["polynomial_constraints"] = json::array();
  for (const auto& c : p.polynomial_constraints) {
    json pc = {{"members", c.members}, {"value", c.value}};
    if (!c.initial_bits.empty()) pc["initial_bits"] = c.initial_bits;
    doc["polynomial_constraints"].push_back(std::move(pc));
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(
    const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

HcboProblem load_problem(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return problem_from_json(doc);
}

}  // namespace parity
