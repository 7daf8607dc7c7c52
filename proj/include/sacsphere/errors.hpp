// Copyright 2026 The sacsphere Authors.
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

namespace sacsphere {

// Invalid user-supplied parameters (integer pairs, names, sequence strings).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Degenerate or otherwise unusable geometric input.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The SAC inverse solve did not reach the residual tolerance.
class SolverError : public GeometryError {
 public:
  SolverError(const std::string& what, double residual)
      : GeometryError(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Internal invariant broke (e.g. post-dedup count differs from the closed form).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sacsphere
