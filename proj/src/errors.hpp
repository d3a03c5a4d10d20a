// Copyright 2026 The exflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace exflow {

enum class ErrorCode {
  kInvalidArgument,
  kSingular,
  kDegenerateState,
  kSizeLimit,
  kDivergent,
  kIndeterminate,
  kInconsistentObservation,
  kUnsupported,
  kOracleFailure,
  kPole,
  kDimensionMismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

/// Raised when a propagator is requested from a start time at which the
/// dynamical map Phi(0, t1) is not invertible.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double t1)
      : Error(ErrorCode::kSingular, what), t1_(t1) {}

  double t1() const noexcept { return t1_; }

 private:
  double t1_;
};

/// The class-1 excitation probability vanished, so the internal q=1 vector
/// is undefined. `limit_direction` is the left limit of that vector.
class DegenerateStateError : public Error {
 public:
  DegenerateStateError(const std::string& what,
                       std::vector<std::complex<double>> limit_direction)
      : Error(ErrorCode::kDegenerateState, what),
        limit_direction_(std::move(limit_direction)) {}

  const std::vector<std::complex<double>>& limit_direction() const noexcept {
    return limit_direction_;
  }

 private:
  std::vector<std::complex<double>> limit_direction_;
};

}  // namespace exflow
