// Copyright 2026 nhqm developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace nhqm {

// Process exit codes used by the CLI. Library errors carry the code they
// map to so the tool does not need a type switch.
enum class ExitCode : int {
  ok = 0,
  invariant_violation = 2,
  invalid_config = 3,
  numerical_failure = 4,
};

class Error : public std::runtime_error {
 public:
  Error(std::string msg, ExitCode code)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ExitCode exit_code() const { return code_; }

 private:
  ExitCode code_;
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& msg)
      : Error(msg, ExitCode::numerical_failure) {}
};

struct NonDiagonalizable : NumericalError {
  using NumericalError::NumericalError;
};
struct NotHermitian : NumericalError {
  using NumericalError::NumericalError;
};
struct NotPSD : NumericalError {
  using NumericalError::NumericalError;
};
struct StepTooCoarse : NumericalError {
  using NumericalError::NumericalError;
};
struct SingularEta : NumericalError {
  using NumericalError::NumericalError;
};
struct IllConditionedMetric : NumericalError {
  using NumericalError::NumericalError;
};
struct NotPhysicallyHermitian : NumericalError {
  using NumericalError::NumericalError;
};
struct MetricMismatch : NumericalError {
  using NumericalError::NumericalError;
};
struct MetricBelowIdentity : NumericalError {
  using NumericalError::NumericalError;
};
struct NotCyclic : NumericalError {
  using NumericalError::NumericalError;
};

struct BadWeights : Error {
  explicit BadWeights(const std::string& msg)
      : Error(msg, ExitCode::invalid_config) {}
};
struct UnnormalizedState : Error {
  explicit UnnormalizedState(const std::string& msg)
      : Error(msg, ExitCode::invalid_config) {}
};
struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& msg)
      : Error(msg, ExitCode::invalid_config) {}
};

}  // namespace nhqm
