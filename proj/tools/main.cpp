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

#include <CLI11.hpp>

#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  jetsolve::cli::Options o;
  CLI::App app{"Solve polynomial systems in truncated power series with support constraints."};
  app.require_subcommand(1);
  app.set_version_flag("--version", JETSOLVE_VERSION);

  std::optional<std::uint32_t> order, c_max, nu_max;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> prefix;
  std::optional<std::string> fixture;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"flatten", "Flatten to coefficient equations"},
      {"solve", "Solve the flattened system"},
      {"pde", "Solve a system with derivatives and report derivative jets"},
      {"decide", "Decide a countable system prefix by prefix"},
      {"chain", "Compute the projection chain C_N^k"},
      {"nu", "Search the approximation threshold nu"},
      {"tau", "Search the differential threshold tau"},
      {"fixture", "Print a built-in fixture"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "System description file, '-' for stdin");
    sub->add_option("--fixture", fixture, "Built-in fixture, e.g. enum-trap:p=5");
    sub->add_option("--order", order, "Truncation order c");
    sub->add_option("--budget", budget, "Node budget (default: $JETSOLVE_BUDGET or 50000000)");
    sub->add_option("--jobs", o.jobs, "Worker threads for exhaustive search")->check(CLI::PositiveNumber);
    sub->add_flag("--emit-system", o.emit_system, "Print the whole flattened system");
    sub->add_option("--height-bound", o.height_bound, "Height bound for guessed rationals");
    sub->add_flag("--witness-all", o.witness_all, "Solve and report every witness branch");
    sub->add_option("--method", o.method, "auto, exhaustive, linear, propagation or lift");
    sub->add_flag("--all", o.all, "Collect every solution (exhaustive search)");
    sub->add_flag("--timing", o.timing, "Include wall-clock times in the report");
    sub->add_option("--cmax", c_max, "Reference order C_max for nu/tau");
    sub->add_option("--nu-max", nu_max, "Largest nu/tau to try");
    sub->add_option("--k", o.k, "Projection arity for chain")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", o.n_max, "Horizon for infinite generators");
    sub->add_option("--prefix", prefix, "Only the first N equations of the generator");
    sub->callback([&o, name = name] { o.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return jetsolve::cli::kUsage;
  }
  o.order = order;
  o.budget = budget;
  o.c_max = c_max;
  o.nu_max = nu_max;
  o.prefix = prefix;
  o.fixture = fixture;
  if (o.input.empty() && !o.fixture) {
    std::cerr << "error: give a description file or --fixture\n";
    return jetsolve::cli::kUsage;
  }
  return jetsolve::cli::run(o, std::cout, std::cerr);
}
