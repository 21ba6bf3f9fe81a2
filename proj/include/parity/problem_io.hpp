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

#include <filesystem>
#include <string>

#include "json.hpp"
#include "parity/problem.hpp"

namespace parity {

/// Parses and validates a problem document:
///
///   {"n_spins": 4,
///    "terms": [{"spins": [1, 2], "coefficient": 0.5}, ...],
///    "product_constraints": [{"spins": [3, 6], "sign": 1}, ...],
///    "polynomial_constraints":
///        [{"members": [[1, 2], [2, 3]], "value": 0,
///          "initial_bits": [0, 1]}, ...]}
///
/// Only "n_spins" and "terms" are required. Spin lists may be unordered;
/// they are sorted on load. Throws InputError on any schema violation.
HcboProblem problem_from_json(const nlohmann::json& doc);
nlohmann::json problem_to_json(const HcboProblem& problem);

HcboProblem load_problem(const std::filesystem::path& path);

/// Reads a whole file or throws InputError.
std::string read_text_file(const std::filesystem::path& path);
/// Writes via a temporary sibling file and rename.
void write_text_file_atomic(
    const std::filesystem::path& path, const std::string& contents);

}  // namespace parity
