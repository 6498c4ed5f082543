// Copyright 2026 The Inertia Authors
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

namespace inertia {

enum class ErrorCode {
  NegativeMass,
  NotNormalized,
  DimensionMismatch,
  PriorNotFullSupport,
  EmptyEvent,
  InfeasibleAlpha,
  InfeasibleAlphas,
  BadBounds,
  EmptyIntersection,
  EmptyInfoSet,
  PieceOverflow,
  NotBayesianKind,
  MissingEventMessage,
  NoPositiveSolution,
  AssumptionViolated,
  NegativeClaim,
  NotThreeStates,
  SolverFailure,
  BadInput,
};

const char* error_code_name(ErrorCode code);

// All library errors carry a stable machine-readable code plus a free-form
// message. Validation errors and solver failures are distinguished by code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  bool is_solver_failure() const { return code_ == ErrorCode::SolverFailure; }

 private:
  ErrorCode code_;
};

}  // namespace inertia
