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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinclone/cli/json_output.hpp"
#include "spinclone/errors.hpp"
#include "spinclone/fidelity.hpp"
#include "spinclone/measurement.hpp"
#include "spinclone/rng.hpp"

namespace spinclone::cli {

enum class ExitCode : int {
  kSuccess = 0,
  kInvariantFailure = 1,
  kUsageError = 2,
};

/// Invalid command-line configuration; maps to ExitCode::kUsageError.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(std::string_view token);

/// How β is chosen for each (α, η): the optimal value beta_max(α, η), or a
/// fixed number.
struct BetaPolicy {
  std::optional<double> fixed;

  /// "max" or a number in [0, 1].
  static BetaPolicy parse(std::string_view token);
  double resolve(double alpha, double eta) const;
};

struct SweepConfig {
  int alpha_steps = 41;
  int eta_steps = 41;
  double eta_min = 0.0;
  double eta_max = std::numbers::pi;
  BetaPolicy beta;
  /// Gauss-Legendre nodes in cos θ; the azimuthal grid gets twice as many.
  int quad_res = 64;
  /// Accepted for a uniform command line; the sweep itself is deterministic
  /// quadrature and draws no random numbers.
  std::uint64_t seed = kDefaultSeed;
  /// Empty writes to the provided stream.
  std::string out;
  OutputFormat format = OutputFormat::kCsv;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws ConfigError.
  void validate() const;
  QuadratureRule quadrature() const { return {quad_res, 2 * quad_res}; }
};

inline constexpr std::array<std::string_view, 14> kSweepColumns = {
    "alpha",     "beta",        "eta",         "p",
    "epsilon",   "f_av_quad",   "f_av_closed", "f_m_quad",
    "f_a_quad",  "f_a_closed",  "f_b_closed",  "f_ma_closed",
    "f_mb_closed", "discrepancy_flags"};

/// Flag set on grid points where a fixed β does not saturate the optimality
/// bound; all fidelity fields of such rows are left empty.
inline constexpr std::string_view kNonSaturatingFlag = "non_saturating";

struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  double eta = 0.0;
  /// Present iff (α, β, η) saturates the optimality bound.
  std::optional<FidelityReport> report;
  std::vector<std::string> flags;
};

/// Grid points in row-major (α outer, η inner) order.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

std::string render_csv(const std::vector<SweepRow>& rows);
Json sweep_json(const std::vector<SweepRow>& rows);
std::string render_sweep(const std::vector<SweepRow>& rows,
                         OutputFormat format);

/// Geometry in the canonical frame a = ẑ, b = (sin η, 0, cos η).
struct GeometrySpec {
  double alpha = 1.0;
  BetaPolicy beta;
  double eta = std::numbers::pi / 2;

  /// Throws ConfigError on out-of-range values and NonSaturatingError when
  /// (α, β, η) misses the optimality bound.
  MeasurementGeometry build() const;
};

/// Input with Bloch vector radius·(sin θ cos φ, sin θ sin φ, cos θ) in the
/// canonical frame.
struct StateSpec {
  double theta = 0.0;
  double phi = 0.0;
  double radius = 1.0;

  Vector3 bloch() const;
};

Json clone_record(const GeometrySpec& geometry, const StateSpec& state);
Json sample_record(const GeometrySpec& geometry, const StateSpec& state,
                   std::uint64_t shots, std::uint64_t seed);

/// Each command writes its result to `out`, diagnostics to `err`, and maps
/// ConfigError, ValidationError and NonSaturatingError to kUsageError.
ExitCode cmd_sweep(const SweepConfig& cfg, std::ostream& out,
                   std::ostream& err);
ExitCode cmd_clone(const GeometrySpec& geometry, const StateSpec& state,
                   std::ostream& out, std::ostream& err);
ExitCode cmd_sample(const GeometrySpec& geometry, const StateSpec& state,
                    std::uint64_t shots, std::uint64_t seed,
                    std::ostream& out, std::ostream& err);

}  // namespace spinclone::cli
