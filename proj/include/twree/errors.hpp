// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The twree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace twree {

/// Which node's power cap (or which physical limit) makes a scenario infeasible.
enum class InfeasibleCause {
  None,
  PowerCapA,
  PowerCapB,
  PowerCapR,
  InsufficientCancellation,  ///< self-interference denominator is nonpositive
  FrameBudget,               ///< per-slot minima do not fit in one frame
  Overflow,                  ///< spectral load too large to evaluate 2^lambda
};

const char* to_string(InfeasibleCause cause);

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant or an operation precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// No schedule meets the rate requirements within the power caps.
class Infeasible : public Error {
 public:
  Infeasible(InfeasibleCause cause, const std::string& what)
      : Error(what), cause_(cause) {}
  InfeasibleCause cause() const noexcept { return cause_; }

 private:
  InfeasibleCause cause_;
};

/// Configuration text could not be turned into a scenario.
class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  /// 1-based line number, 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace twree
