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

#include <stdexcept>
#include <string>

namespace parity {

/// Malformed or inconsistent user input (problem, device, circuit files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The device graph is not connected.
class DisconnectedDeviceError : public InputError {
 public:
  using InputError::InputError;
};

/// No layout exists that keeps polynomial-constraint groups local, or the
/// device has fewer nodes than qubits.
class InfeasiblePlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A layout change would split a polynomial-constraint group.
class LocalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds a hard size cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parity
