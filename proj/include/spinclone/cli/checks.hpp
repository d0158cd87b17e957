// Copyright 2026 The spinclone Authors
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinclone/cli/commands.hpp"
#include "spinclone/cloner.hpp"

namespace spinclone::cli {

struct CheckOptions {
  /// Signs used to build the dilation basis under test. Only negative-control
  /// fixtures change these.
  DilationSigns signs;
  /// (α, η) grid for the exact algebraic suites.
  int grid_steps = 41;
  /// Coarser grid for the quadrature suites.
  int quadrature_steps = 11;
  int quad_res = 64;
  /// Random (geometry, state) pairs per randomized suite.
  int random_trials = 1000;
  std::uint64_t sampler_shots = 100000;
  std::uint64_t seed = kDefaultSeed;
};

struct CheckResult {
  std::string name;
  std::string quantity;
  double value = 0.0;
  /// The suite passes iff value < bound, or value > bound when lower_bound.
  double bound = 0.0;
  bool lower_bound = false;
  bool passed = false;
};

struct CheckReport {
  std::vector<CheckResult> results;
  bool passed() const;
};

CheckReport run_checks(const CheckOptions& options);
std::string render_check_report(const CheckReport& report);

/// kSuccess iff every suite passes, kInvariantFailure otherwise.
ExitCode cmd_check(const CheckOptions& options, std::ostream& out);

}  // namespace spinclone::cli
