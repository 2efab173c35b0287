// Copyright 2026 The jetsolve Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetsolve {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define JETSOLVE_DEFINE_ERROR(Name)     \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

JETSOLVE_DEFINE_ERROR(NonPrimeModulus);
JETSOLVE_DEFINE_ERROR(DivisionByZero);
JETSOLVE_DEFINE_ERROR(NotEnumerable);
JETSOLVE_DEFINE_ERROR(FieldMismatch);
JETSOLVE_DEFINE_ERROR(RegistryMismatch);
JETSOLVE_DEFINE_ERROR(MissingAssignment);
JETSOLVE_DEFINE_ERROR(OrderTooLow);
JETSOLVE_DEFINE_ERROR(OrderIncrease);
JETSOLVE_DEFINE_ERROR(InvalidWitness);
JETSOLVE_DEFINE_ERROR(NotLinear);
JETSOLVE_DEFINE_ERROR(FieldNotFinite);
JETSOLVE_DEFINE_ERROR(BudgetExceeded);
JETSOLVE_DEFINE_ERROR(SemanticError);

#undef JETSOLVE_DEFINE_ERROR

/// No extension of a partial jet tuple to the requested order was found.
/// `exhausted()` distinguishes a complete refutation from a budget stop.
class DeadEnd : public Error {
 public:
  DeadEnd(const std::string& what, unsigned level, bool exhausted)
      : Error(what), level_(level), exhausted_(exhausted) {}

  unsigned level() const noexcept { return level_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  unsigned level_;
  bool exhausted_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace jetsolve
