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

#include "spinclone/cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "spinclone/fidelity.hpp"
#include "spinclone/random_inputs.hpp"
#include "spinclone/stats.hpp"

namespace spinclone::cli {
namespace {

constexpr double kPi = std::numbers::pi;

void for_each_grid_point(int steps,
                         const std::function<void(double, double)>& f) {
  for (int i = 0; i < steps; ++i) {
    const double alpha = static_cast<double>(i) / (steps - 1);
    for (int j = 0; j < steps; ++j) {
      f(alpha, kPi * static_cast<double>(j) / (steps - 1));
    }
  }
}

CheckResult upper(std::string name, std::string quantity, double value,
                  double bound) {
  return {std::move(name), std::move(quantity), value, bound, false,
          value < bound};
}

CheckResult lower(std::string name, std::string quantity, double value,
                  double bound) {
  return {std::move(name), std::move(quantity), value, bound, true,
          value > bound};
}

// Each suite runs under its own guard so an exception fails that suite alone
// (reported with value NaN) instead of aborting the report.
CheckResult guarded(const std::string& name,
                    const std::function<CheckResult()>& suite) {
  try {
    return suite();
  } catch (const std::exception& e) {
    return {name, std::string("exception: ") + e.what(), std::nan(""), 0.0,
            false, false};
  }
}

// |λ|² weights, the Born-rule joint distribution and the diagonal of the
// measure-and-prepare output must coincide.
double statistics_mismatch(const MeasurementGeometry& g, const QubitState& psi) {
  const Cloner cloner(g);
  const CloneOutput out = cloner.clone(psi);
  const JointDistribution born = joint_distribution(psi.density(), build_povm(g));
  const TwoQubitOperator mp = measure_and_prepare(g, psi);
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4cd& v = cloner.product_states()[k];
    const double lambda2 = std::norm(out.amplitudes[k]);
    const double diag = v.dot(mp * v).real();
    worst = std::max({worst, std::abs(lambda2 - born.probabilities[k]),
                      std::abs(diag - born.probabilities[k]),
                      std::abs(out.statistics.probabilities[k] -
                               born.probabilities[k])});
  }
  return worst;
}

double bloch_mismatch(const MeasurementGeometry& g, const QubitState& psi) {
  const CloneOutput out = clone_pure(g, psi);
  const Vector3 c = psi.bloch();
  const Vector3 n = g.frame().from_canonical(Vector3(Vector3::UnitY()));
  const double transverse = std::sqrt(1.0 - g.beta() * g.beta());
  return std::max(
      {std::abs(g.a().dot(out.bloch_a) - g.alpha() * g.a().dot(c)),
       std::abs(g.b().dot(out.bloch_b) - g.beta() * g.b().dot(c)),
       std::abs(n.dot(out.bloch_a) - transverse * n.dot(c)),
       std::abs(n.dot(out.bloch_b))});
}

}  // namespace

bool CheckReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

CheckReport run_checks(const CheckOptions& options) {
  CheckReport report;
  auto add = [&](const std::string& name,
                 const std::function<CheckResult()>& suite) {
    report.results.push_back(guarded(name, suite));
  };
  const int steps = options.grid_steps;

  add("povm_completeness", [&] {
    double worst = 0.0;
    for_each_grid_point(steps, [&](double alpha, double eta) {
      worst = std::max(worst, completeness_residual(
                                  build_povm(optimal_geometry(alpha, eta))));
    });
    return upper("povm_completeness", "max ||sum(Pi) - 1||", worst, 1e-12);
  });

  add("povm_positivity", [&] {
    double worst = 0.0;
    for_each_grid_point(steps, [&](double alpha, double eta) {
      worst = std::max(
          worst, -min_povm_eigenvalue(build_povm(optimal_geometry(alpha, eta))));
    });
    return upper("povm_positivity", "max -min eig(Pi)", worst, 1e-12);
  });

  add("saturation", [&] {
    double worst = 0.0;
    for_each_grid_point(steps, [&](double alpha, double eta) {
      worst = std::max(worst, std::abs(optimality_lhs(
                                  alpha, beta_max(alpha, eta), eta) - 2.0));
    });
    return upper("saturation", "max ||aa+bb| + |aa-bb| - 2|", worst, 1e-9);
  });

  add("universal_unsaturated", [&] {
    const double lhs = optimality_lhs(2.0 / 3.0, 2.0 / 3.0, kPi / 2);
    CheckResult r = upper("universal_unsaturated",
                          "|lhs(2/3, 2/3, pi/2) - 4 sqrt(2)/3|",
                          std::abs(lhs - 4.0 * std::sqrt(2.0) / 3.0), 1e-12);
    r.passed = r.passed && lhs < 2.0 - kSaturationTolerance;
    return r;
  });

  add("naimark_orthonormality", [&] {
    double worst = 0.0;
    for_each_grid_point(steps, [&](double alpha, double eta) {
      worst = std::max(worst, orthonormality_residual(naimark_basis_unchecked(
                                  optimal_geometry(alpha, eta), options.signs)));
    });
    return upper("naimark_orthonormality", "max |<phi_i|phi_j> - delta_ij|",
                 worst, 1e-12);
  });

  add("unitarity", [&] {
    double worst = 0.0;
    for_each_grid_point(steps, [&](double alpha, double eta) {
      const MeasurementGeometry g = optimal_geometry(alpha, eta);
      worst = std::max(worst, unitarity_residual(clone_unitary(
                                  g, naimark_basis_unchecked(g, options.signs))));
    });
    return upper("unitarity", "max ||U^dag U - 1||", worst, 1e-12);
  });

  add("naimark_condition", [&] {
    Rng rng(options.seed);
    double worst = 0.0;
    for (int t = 0; t < options.random_trials; ++t) {
      const MeasurementGeometry g = random_optimal_geometry(rng);
      const QubitState psi = haar_random_state(rng);
      const NaimarkBasis basis = naimark_basis_unchecked(g, options.signs);
      const Povm4 povm = build_povm(g);
      const Eigen::Vector4cd input =
          kron(psi.amplitudes(), blank_state(g).amplitudes());
      for (Outcome o : kOutcomes) {
        const double dilated = std::norm(basis[o].amplitudes().dot(input));
        const double born =
            psi.amplitudes().dot(povm[o] * psi.amplitudes()).real();
        worst = std::max(worst, std::abs(dilated - born));
      }
    }
    return upper("naimark_condition", "max ||<phi|psi,b+>|^2 - <psi|Pi|psi>|",
                 worst, 1e-10);
  });

  add("statistics_equivalence", [&] {
    Rng rng(options.seed + 1);
    double worst = 0.0;
    for (int t = 0; t < options.random_trials; ++t) {
      const MeasurementGeometry g = random_optimal_geometry(rng);
      worst = std::max(worst, statistics_mismatch(g, haar_random_state(rng)));
    }
    return upper("statistics_equivalence",
                 "max |lambda^2 - Born|, |diag(rho_mp) - Born|", worst, 1e-10);
  });

  add("bloch_relations", [&] {
    Rng rng(options.seed + 2);
    double worst = 0.0;
    for (int t = 0; t < options.random_trials; ++t) {
      const MeasurementGeometry g = random_optimal_geometry(rng);
      worst = std::max(worst, bloch_mismatch(g, haar_random_state(rng)));
    }
    return upper("bloch_relations", "max Bloch relation residual", worst,
                 1e-10);
  });

  add("sampler_chi_square", [&] {
    Rng rng(options.seed + 3);
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const QubitOperator rho = random_density(rng);
    const OutcomeCounts counts =
        sample_outcomes(rho, g, options.sampler_shots, options.seed);
    const JointDistribution expected = joint_distribution(rho, build_povm(g));
    const ChiSquare chi = chi_square_test(counts, expected.probabilities);
    return lower("sampler_chi_square", "chi-square p-value", chi.p_value, 1e-3);
  });

  // The quadrature suites share one rule and one pass over the coarse grid.
  const SphereQuadrature quadrature({options.quad_res, 2 * options.quad_res});
  std::vector<FidelityReport> reports;
  auto quadrature_grid = [&]() -> const std::vector<FidelityReport>& {
    if (reports.empty()) {
      for_each_grid_point(options.quadrature_steps, [&](double alpha, double eta) {
        reports.push_back(
            fidelity_report(optimal_geometry(alpha, eta), quadrature));
      });
    }
    return reports;
  };

  add("single_clone_closed_forms", [&] {
    double worst = 0.0;
    for (const FidelityReport& r : quadrature_grid()) {
      worst = std::max({worst, std::abs(r.f_b_quad - (0.5 + r.beta / 6.0)),
                        std::abs(r.f_mb_quad - (0.5 + r.beta / 6.0)),
                        std::abs(r.f_ma_quad - (0.5 + r.alpha / 6.0))});
    }
    return upper("single_clone_closed_forms",
                 "max |F_quad - (1/2 + s/6)| for F_b, F_mb, F_ma", worst, 1e-9);
  });

  add("commuting_limit", [&] {
    const FidelityReport r = fidelity_report(optimal_geometry(1.0, 0.0), quadrature);
    return upper("commuting_limit", "max |F_a - 2/3|, |F_b - 2/3| at eta=0",
                 std::max(std::abs(r.f_a_quad - 2.0 / 3.0),
                          std::abs(r.f_b_quad - 2.0 / 3.0)),
                 1e-9);
  });

  add("fidelity_ordering", [&] {
    double worst = 0.0;
    for (const FidelityReport& r : quadrature_grid()) {
      worst = std::max(worst, r.f_m_quad - r.f_av_quad);
    }
    return upper("fidelity_ordering", "max (F_m - F_av)", worst, 1e-10);
  });

  add("universal_baseline", [&] {
    const UniversalBaseline u = universal_baseline();
    return upper("universal_baseline", "|F_universal - 25/36|",
                 std::abs(u.two_particle_fidelity - 25.0 / 36.0), 1e-15);
  });

  return report;
}

std::string render_check_report(const CheckReport& report) {
  std::string out;
  int passed = 0;
  char line[256];
  for (const CheckResult& r : report.results) {
    passed += r.passed ? 1 : 0;
    std::snprintf(line, sizeof(line), "%s %-26s %-48s %.3e %s %.0e\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(),
                  r.quantity.c_str(), r.value, r.lower_bound ? ">" : "<",
                  r.bound);
    out += line;
  }
  std::snprintf(line, sizeof(line), "%d/%zu suites passed\n", passed,
                report.results.size());
  out += line;
  return out;
}

ExitCode cmd_check(const CheckOptions& options, std::ostream& out) {
  const CheckReport report = run_checks(options);
  out << render_check_report(report);
  return report.passed() ? ExitCode::kSuccess : ExitCode::kInvariantFailure;
}

}  // namespace spinclone::cli
