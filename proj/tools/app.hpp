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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace jetsolve::cli {

enum ExitCode : int { kSat = 0, kUnsat = 1, kInconclusive = 2, kUsage = 3 };

struct Options {
  /// flatten, solve, decide, chain, nu, tau, pde or fixture.
  std::string command;
  /// Path of a system description; "-" reads standard input.
  std::string input;
  /// Description text given directly (takes precedence over `input`).
  std::optional<std::string> text;
  std::optional<std::string> fixture;
  std::optional<std::uint32_t> order;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
  bool emit_system = false;
  std::uint32_t height_bound = 10;
  bool witness_all = false;
  std::string method = "auto";
  bool all = false;
  bool timing = false;
  std::optional<std::uint32_t> c_max;
  std::optional<std::uint32_t> nu_max;
  std::size_t k = 1;
  std::size_t n_max = 24;
  std::optional<std::size_t> prefix;
};

/// Runs one command: JSON report on `out`, a one-line summary and any
/// diagnostics on `err`. Returns an ExitCode.
int run(const Options& options, std::ostream& out, std::ostream& err);

}  // namespace jetsolve::cli
