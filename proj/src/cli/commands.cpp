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

#include "spinclone/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "spinclone/cloner.hpp"
#include "spinclone/stats.hpp"

namespace spinclone::cli {
namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

double grid_point(double lo, double hi, int i, int steps) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
}

SweepRow sweep_row(double alpha, double eta, const SweepConfig& cfg,
                   const SphereQuadrature& quadrature) {
  SweepRow row;
  row.alpha = alpha;
  row.eta = eta;
  row.beta = cfg.beta.resolve(alpha, eta);
  try {
    const MeasurementGeometry g = canonical_geometry(alpha, row.beta, eta);
    row.report = fidelity_report(g, quadrature);
    row.flags = row.report->discrepancies;
  } catch (const NonSaturatingError&) {
    row.flags = {std::string(kNonSaturatingFlag)};
  }
  return row;
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (const std::string& f : flags) {
    if (!out.empty()) out += ';';
    out += f;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Numeric columns 3..12 of a row, in kSweepColumns order.
std::array<double, 10> report_values(const FidelityReport& r) {
  return {r.p,          r.epsilon,    r.f_av_quad,  r.f_av_closed,
          r.f_m_quad,   r.f_a_quad,   r.f_a_closed, r.f_b_closed,
          r.f_ma_closed, r.f_mb_closed};
}

Json vector_json(const Vector3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json distribution_json(const std::array<double, 4>& values) {
  Json out = Json::object();
  for (Outcome o : kOutcomes) out[std::string(label(o))] = values[index(o)];
  return out;
}

Json geometry_json(const MeasurementGeometry& g) {
  Json out = Json::object();
  out["alpha"] = g.alpha();
  out["beta"] = g.beta();
  out["eta"] = g.eta();
  out["p"] = g.p();
  out["epsilon"] = g.epsilon();
  out["a"] = vector_json(g.a().vec());
  out["b"] = vector_json(g.b().vec());
  out["m"] = vector_json(g.m().vec());
  out["l"] = vector_json(g.l().vec());
  return out;
}

Json state_json(const StateSpec& s) {
  Json out = Json::object();
  out["theta"] = s.theta;
  out["phi"] = s.phi;
  out["radius"] = s.radius;
  out["bloch"] = vector_json(s.bloch());
  return out;
}

void validate_state(const StateSpec& s) {
  require(std::isfinite(s.theta) && std::isfinite(s.phi),
          "state angles must be finite");
  require(s.radius >= 0.0 && s.radius <= 1.0,
          "state radius must lie in [0, 1]");
}

template <typename F>
ExitCode guarded(std::ostream& err, F&& body) {
  try {
    body();
    return ExitCode::kSuccess;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NonSaturatingError& e) {
    err << "error: " << e.what() << '\n';
  }
  return ExitCode::kUsageError;
}

}  // namespace

OutputFormat parse_format(std::string_view token) {
  if (token == "csv") return OutputFormat::kCsv;
  if (token == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + std::string(token) +
                    "' (expected csv or json)");
}

BetaPolicy BetaPolicy::parse(std::string_view token) {
  if (token == "max") return {};
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  require(ec == std::errc() && end == token.data() + token.size(),
          "--beta expects 'max' or a number, got '" + std::string(token) +
              "'");
  require(value >= 0.0 && value <= 1.0, "--beta must lie in [0, 1]");
  return {value};
}

double BetaPolicy::resolve(double alpha, double eta) const {
  return fixed ? *fixed : beta_max(alpha, eta);
}

void SweepConfig::validate() const {
  require(alpha_steps >= 2, "--alpha-steps must be at least 2");
  require(eta_steps >= 2, "--eta-steps must be at least 2");
  require(std::isfinite(eta_min) && std::isfinite(eta_max) && 0.0 <= eta_min &&
              eta_min <= eta_max && eta_max <= kPi,
          "eta range must satisfy 0 <= eta-min <= eta-max <= pi");
  require(quad_res >= 1, "--quad-res must be at least 1");
  if (beta.fixed) {
    require(*beta.fixed >= 0.0 && *beta.fixed <= 1.0,
            "--beta must lie in [0, 1]");
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const SphereQuadrature quadrature(cfg.quadrature());
  const std::size_t total =
      static_cast<std::size_t>(cfg.alpha_steps) * cfg.eta_steps;
  std::vector<SweepRow> rows(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const int i = static_cast<int>(k / cfg.eta_steps);
      const int j = static_cast<int>(k % cfg.eta_steps);
      rows[k] = sweep_row(grid_point(0.0, 1.0, i, cfg.alpha_steps),
                          grid_point(cfg.eta_min, cfg.eta_max, j, cfg.eta_steps),
                          cfg, quadrature);
    }
  };
  unsigned threads = cfg.threads != 0 ? cfg.threads
                                      : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(total));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

std::string render_csv(const std::vector<SweepRow>& rows) {
  std::string out;
  for (std::size_t c = 0; c < kSweepColumns.size(); ++c) {
    if (c != 0) out += ',';
    out += kSweepColumns[c];
  }
  out += "\r\n";
  for (const SweepRow& row : rows) {
    out += format_number(row.alpha) + ',' + format_number(row.beta) + ',' +
           format_number(row.eta);
    if (row.report) {
      for (double v : report_values(*row.report)) out += ',' + format_number(v);
    } else {
      out.append(10, ',');
    }
    out += ',' + csv_field(join_flags(row.flags)) + "\r\n";
  }
  return out;
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const SweepRow& row : rows) {
    Json obj = Json::object();
    obj["alpha"] = row.alpha;
    obj["beta"] = row.beta;
    obj["eta"] = row.eta;
    std::array<double, 10> values;
    values.fill(std::nan(""));
    if (row.report) values = report_values(*row.report);
    for (std::size_t c = 0; c < values.size(); ++c) {
      obj[std::string(kSweepColumns[c + 3])] = values[c];
    }
    obj["discrepancy_flags"] = join_flags(row.flags);
    out.push_back(std::move(obj));
  }
  return out;
}

std::string render_sweep(const std::vector<SweepRow>& rows,
                         OutputFormat format) {
  if (format == OutputFormat::kCsv) return render_csv(rows);
  return dump_json(sweep_json(rows)) + "\n";
}

MeasurementGeometry GeometrySpec::build() const {
  require(alpha >= 0.0 && alpha <= 1.0, "--alpha must lie in [0, 1]");
  require(eta >= 0.0 && eta <= kPi, "--eta must lie in [0, pi]");
  return canonical_geometry(alpha, beta.resolve(alpha, eta), eta);
}

Vector3 StateSpec::bloch() const {
  return radius * UnitVector3::from_angles(theta, phi).vec();
}

Json clone_record(const GeometrySpec& geometry, const StateSpec& state) {
  validate_state(state);
  const MeasurementGeometry g = geometry.build();
  const Cloner cloner(g);
  const Vector3 c = state.bloch();
  const bool pure = state.radius == 1.0;
  const CloneOutput result =
      pure ? cloner.clone(QubitState::from_bloch_angles(state.theta, state.phi))
           : cloner.clone(density_from_bloch(c));

  Json out = Json::object();
  out["geometry"] = geometry_json(g);
  out["state"] = state_json(state);
  if (pure) {
    Json amps = Json::array();
    for (Outcome o : kOutcomes) {
      const Complex z = result.amplitudes[index(o)];
      Json entry = Json::object();
      entry["outcome"] = std::string(label(o));
      entry["re"] = z.real();
      entry["im"] = z.imag();
      amps.push_back(std::move(entry));
    }
    out["amplitudes"] = std::move(amps);
  } else {
    out["amplitudes"] = nullptr;
  }
  out["probabilities"] = distribution_json(result.statistics.probabilities);
  out["bloch_a"] = vector_json(result.bloch_a);
  out["bloch_b"] = vector_json(result.bloch_b);

  const Vector3 n = g.frame().from_canonical(Vector3(Vector3::UnitY()));
  const double a_c = g.a().dot(c);
  const double b_c = g.b().dot(c);
  const double n_c = n.dot(c);
  Json residuals = Json::object();
  residuals["a_component"] =
      std::abs(g.a().dot(result.bloch_a) - g.alpha() * a_c);
  residuals["b_component"] =
      std::abs(g.b().dot(result.bloch_b) - g.beta() * b_c);
  residuals["orthogonal_a"] = std::abs(
      n.dot(result.bloch_a) - std::sqrt(1.0 - g.beta() * g.beta()) * n_c);
  residuals["orthogonal_b"] = std::abs(n.dot(result.bloch_b));
  out["residuals"] = std::move(residuals);
  return out;
}

Json sample_record(const GeometrySpec& geometry, const StateSpec& state,
                   std::uint64_t shots, std::uint64_t seed) {
  validate_state(state);
  require(shots >= 1, "--shots must be at least 1");
  const MeasurementGeometry g = geometry.build();
  const QubitOperator rho = density_from_bloch(state.bloch());
  const JointDistribution expected = joint_distribution(rho, build_povm(g));
  const OutcomeCounts counts = sample_outcomes(rho, g, shots, seed);
  const ChiSquare chi = chi_square_test(counts, expected.probabilities);

  Json out = Json::object();
  out["geometry"] = geometry_json(g);
  out["state"] = state_json(state);
  out["shots"] = shots;
  out["seed"] = seed;
  if (shots == 1) {
    for (Outcome o : kOutcomes) {
      if (counts[index(o)] == 1) out["outcome"] = std::string(label(o));
    }
  }
  Json count_obj = Json::object();
  std::array<double, 4> frequencies{};
  for (Outcome o : kOutcomes) {
    count_obj[std::string(label(o))] = counts[index(o)];
    frequencies[index(o)] =
        static_cast<double>(counts[index(o)]) / static_cast<double>(shots);
  }
  out["counts"] = std::move(count_obj);
  out["frequencies"] = distribution_json(frequencies);
  out["expected"] = distribution_json(expected.probabilities);
  Json chi_obj = Json::object();
  chi_obj["statistic"] = chi.statistic;
  chi_obj["dof"] = chi.dof;
  chi_obj["p_value"] = chi.p_value;
  out["chi_square"] = std::move(chi_obj);
  return out;
}

ExitCode cmd_sweep(const SweepConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary | std::ios::trunc);
      require(file.is_open(), "cannot open '" + cfg.out + "' for writing");
    }
    const std::string text = render_sweep(run_sweep(cfg), cfg.format);
    std::ostream& sink = cfg.out.empty() ? out : file;
    sink << text;
    sink.flush();
    require(static_cast<bool>(sink), "failed writing sweep output");
  });
}

ExitCode cmd_clone(const GeometrySpec& geometry, const StateSpec& state,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << dump_json(clone_record(geometry, state)) << '\n';
  });
}

ExitCode cmd_sample(const GeometrySpec& geometry, const StateSpec& state,
                    std::uint64_t shots, std::uint64_t seed,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << dump_json(sample_record(geometry, state, shots, seed)) << '\n';
  });
}

}  // namespace spinclone::cli
