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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "spinclone/cli/checks.hpp"
#include "spinclone/cli/commands.hpp"

namespace {

using spinclone::cli::ExitCode;

constexpr double kRadiansPerDegree = std::numbers::pi / 180.0;

struct GeometryFlags {
  double alpha = 1.0;
  std::string beta = "max";
  double eta = std::numbers::pi / 2;
};

void add_geometry_flags(CLI::App* cmd, GeometryFlags& g) {
  cmd->add_option("--alpha", g.alpha, "Sharpness of the a measurement, in [0, 1]")
      ->capture_default_str();
  cmd->add_option("--beta", g.beta, "Sharpness of the b measurement: max or a value in [0, 1]")
      ->capture_default_str();
  cmd->add_option("--eta", g.eta, "Angle between a and b")->capture_default_str();
}

void add_state_flags(CLI::App* cmd, spinclone::cli::StateSpec& s) {
  cmd->add_option("--theta", s.theta, "Polar angle of the input Bloch vector from a")
      ->capture_default_str();
  cmd->add_option("--phi", s.phi, "Azimuth of the input Bloch vector from the a-b plane")
      ->capture_default_str();
}

// Runs `body` against stdout or the --out file.
template <typename F>
int with_output(const std::string& path, F&& body) {
  if (path.empty()) return static_cast<int>(body(std::cout));
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return static_cast<int>(ExitCode::kUsageError);
  }
  return static_cast<int>(body(file));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal joint measurement of two spin components as a cloning machine"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  spinclone::cli::CheckOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "Run every invariant suite");
  check->add_option("--seed", check_opts.seed, "Seed for the randomized suites")
      ->capture_default_str();
  check->add_option("--quad-res", check_opts.quad_res, "Gauss-Legendre nodes in cos(theta)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  spinclone::cli::SweepConfig sweep_cfg;
  std::string sweep_beta = "max";
  std::string sweep_format = "csv";
  bool sweep_degrees = false;
  CLI::App* sweep = app.add_subcommand("sweep", "Fidelities over an (alpha, eta) grid");
  sweep->add_option("--alpha-steps", sweep_cfg.alpha_steps, "Grid points in alpha over [0, 1]")
      ->capture_default_str();
  sweep->add_option("--eta-steps", sweep_cfg.eta_steps, "Grid points in eta")
      ->capture_default_str();
  sweep->add_option("--eta-min", sweep_cfg.eta_min, "Lower end of the eta range")
      ->capture_default_str();
  sweep->add_option("--eta-max", sweep_cfg.eta_max, "Upper end of the eta range")
      ->capture_default_str();
  sweep->add_option("--beta", sweep_beta, "max or a fixed value in [0, 1]")
      ->capture_default_str();
  sweep->add_option("--quad-res", sweep_cfg.quad_res, "Gauss-Legendre nodes in cos(theta)")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_cfg.seed, "Accepted for symmetry; the sweep is deterministic")
      ->capture_default_str();
  sweep->add_option("--out", sweep_cfg.out, "Output file (default: stdout)");
  sweep->add_option("--format", sweep_format, "csv or json")->capture_default_str();
  sweep->add_option("--threads", sweep_cfg.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  sweep->add_flag("--degrees", sweep_degrees, "Read angles in degrees");

  GeometryFlags clone_geo;
  spinclone::cli::StateSpec clone_state;
  std::string clone_out;
  bool clone_degrees = false;
  CLI::App* clone = app.add_subcommand("clone", "Clone one pure state and report the outputs as JSON");
  add_geometry_flags(clone, clone_geo);
  add_state_flags(clone, clone_state);
  clone->add_option("--out", clone_out, "Output file (default: stdout)");
  clone->add_flag("--degrees", clone_degrees, "Read angles in degrees");

  GeometryFlags sample_geo;
  spinclone::cli::StateSpec sample_state;
  std::uint64_t shots = 1000000;
  std::uint64_t sample_seed = spinclone::kDefaultSeed;
  std::string sample_out;
  bool sample_degrees = false;
  CLI::App* sample = app.add_subcommand("sample", "Simulate the joint measurement and compare with the Born rule");
  add_geometry_flags(sample, sample_geo);
  add_state_flags(sample, sample_state);
  sample->add_option("--radius", sample_state.radius, "Bloch vector length of the input, in [0, 1]")
      ->capture_default_str();
  sample->add_option("--shots", shots, "Number of measurements")->capture_default_str();
  sample->add_option("--seed", sample_seed, "PRNG seed")->capture_default_str();
  sample->add_option("--out", sample_out, "Output file (default: stdout)");
  sample->add_flag("--degrees", sample_degrees, "Read angles in degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::kUsageError);
  }

  auto geometry = [](const GeometryFlags& flags, bool degrees) {
    spinclone::cli::GeometrySpec spec;
    spec.alpha = flags.alpha;
    spec.beta = spinclone::cli::BetaPolicy::parse(flags.beta);
    spec.eta = degrees ? flags.eta * kRadiansPerDegree : flags.eta;
    return spec;
  };
  auto to_radians = [](spinclone::cli::StateSpec s, bool degrees) {
    if (degrees) {
      s.theta *= kRadiansPerDegree;
      s.phi *= kRadiansPerDegree;
    }
    return s;
  };

  try {
    if (*check) {
      return static_cast<int>(spinclone::cli::cmd_check(check_opts, std::cout));
    }
    if (*sweep) {
      sweep_cfg.beta = spinclone::cli::BetaPolicy::parse(sweep_beta);
      sweep_cfg.format = spinclone::cli::parse_format(sweep_format);
      if (sweep_degrees) {
        sweep_cfg.eta_min *= kRadiansPerDegree;
        sweep_cfg.eta_max *= kRadiansPerDegree;
      }
      return static_cast<int>(spinclone::cli::cmd_sweep(sweep_cfg, std::cout, std::cerr));
    }
    if (*clone) {
      const auto spec = geometry(clone_geo, clone_degrees);
      const auto state = to_radians(clone_state, clone_degrees);
      return with_output(clone_out, [&](std::ostream& out) {
        return spinclone::cli::cmd_clone(spec, state, out, std::cerr);
      });
    }
    const auto spec = geometry(sample_geo, sample_degrees);
    const auto state = to_radians(sample_state, sample_degrees);
    return with_output(sample_out, [&](std::ostream& out) {
      return spinclone::cli::cmd_sample(spec, state, shots, sample_seed, out, std::cerr);
    });
  } catch (const spinclone::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsageError);
  }
}
