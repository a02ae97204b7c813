// Copyright 2026 The gamedecomp Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace gamedecomp {

// Broad failure classes. The CLI maps them onto exit codes 1, 2 and 3.
enum class ErrorKind {
  kInvalidInput,
  kPrecondition,
  kInternalConsistency,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid_input";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kInternalConsistency: return "internal_consistency";
  }
  return "unknown";
}

// Base of every exception thrown by the library. `code` is a short
// machine-readable tag such as "shape_mismatch" or "not_potential".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message, std::string code = "invalid_input")
      : Error(ErrorKind::kInvalidInput, std::move(code), message) {}
};

// Two games (or a game and a profile) live on different strategy spaces.
class ShapeMismatch : public InvalidInput {
 public:
  ShapeMismatch(std::string dimension, std::size_t lhs, std::size_t rhs)
      : InvalidInput("shape mismatch in " + dimension + ": " + std::to_string(lhs) +
                         " vs " + std::to_string(rhs),
                     "shape_mismatch"),
        dimension_(std::move(dimension)),
        lhs_(lhs),
        rhs_(rhs) {}

  const std::string& dimension() const noexcept { return dimension_; }
  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::string dimension_;
  std::size_t lhs_;
  std::size_t rhs_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message, std::string code = "precondition")
      : Error(ErrorKind::kPrecondition, std::move(code), message) {}
};

// A cycle-condition precondition failed; carries the worst observed violation.
class CycleConditionError : public PreconditionError {
 public:
  CycleConditionError(std::string code, const std::string& message, double worst_violation)
      : PreconditionError(message + " (worst violation " + std::to_string(worst_violation) + ")",
                          std::move(code)),
        worst_violation_(worst_violation) {}

  double worst_violation() const noexcept { return worst_violation_; }

 private:
  double worst_violation_;
};

inline CycleConditionError NotPotential(double worst) {
  return {"not_potential", "game fails the potential cycle condition", worst};
}
inline CycleConditionError NotZeroSumEquivalent(double worst) {
  return {"not_zero_sum_equivalent", "game fails the zero-sum equivalence cycle condition", worst};
}
inline CycleConditionError NotInB(double worst) {
  return {"not_zero_sum_equivalent_potential",
          "game is not both potential and zero-sum equivalent", worst};
}

class CapacityExceeded : public PreconditionError {
 public:
  explicit CapacityExceeded(const std::string& message)
      : PreconditionError(message, "capacity_exceeded") {}
};

// Signals a bug: a mathematical identity the library relies on did not hold.
class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& message)
      : Error(ErrorKind::kInternalConsistency, "internal_consistency", message) {}
};

}  // namespace gamedecomp
