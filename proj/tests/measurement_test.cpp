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

#include "spinclone/measurement.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "spinclone/errors.hpp"
#include "spinclone/random_inputs.hpp"
#include "spinclone/rng.hpp"

using namespace spinclone;

namespace {

constexpr double kPi = std::numbers::pi;

// Largest β in [0, 1] with optimality_lhs(α, β, η) <= 2, by bisection on the
// optimality condition itself.
double beta_by_bisection(double alpha, double eta) {
  if (optimality_lhs(alpha, 1.0, eta) <= 2.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (optimality_lhs(alpha, mid, eta) <= 2.0 ? lo : hi) = mid;
  }
  return lo;
}

// Equal sharpness on the optimal frontier: α(|a+b| + |a−b|) = 2.
double equal_sharpness(double eta) {
  return 1.0 / (std::cos(eta / 2) + std::sin(eta / 2));
}

double expectation(const QubitOperator& op, const QubitOperator& rho) {
  return (rho * op).trace().real();
}

}  // namespace

TEST(optimality_lhs, examples) {
  EXPECT_NEAR(optimality_lhs(1.0, 0.0, 0.7), 2.0, 1e-15);
  EXPECT_NEAR(optimality_lhs(2.0 / 3, 2.0 / 3, kPi / 2), 4.0 * std::sqrt(2.0) / 3, 1e-15);
  EXPECT_NEAR(optimality_lhs(0.6, 0.8, kPi / 2), 2.0, 1e-12);
  EXPECT_NEAR(optimality_lhs(0.9, 0.9, kPi / 2), 1.8 * std::sqrt(2.0), 1e-14);
}

TEST(optimality_lhs, universal_sharpness_never_saturates) {
  for (double eta : {kPi / 6, kPi / 3, kPi / 2}) {
    EXPECT_LT(optimality_lhs(2.0 / 3, 2.0 / 3, eta), 2.0) << eta;
  }
}

TEST(beta_max, examples) {
  EXPECT_EQ(beta_max(1.0, 0.0), 1.0);
  EXPECT_NEAR(beta_max(1.0, kPi / 2), 0.0, 1e-15);
  EXPECT_NEAR(beta_max(0.6, kPi / 2), 0.8, 1e-15);
  EXPECT_EQ(beta_max(0.0, 1.0), 1.0);
}

// Frozen from tests/oracle/fidelity_oracle.py (Brent root of the optimality
// condition).
TEST(beta_max, matches_root_finding_reference) {
  EXPECT_NEAR(beta_max(0.3, 1.0), 0.9667232806376439, 1e-14);
  EXPECT_NEAR(beta_max(0.9, 2.5), 0.6290763268872552, 1e-14);
  EXPECT_NEAR(beta_max(0.5, 0.3), 0.9857549047259314, 1e-14);
}

TEST(beta_max, matches_bisection_on_grid) {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double alpha = i / 40.0, eta = kPi * j / 40.0;
      // At α = 1 the condition is flat in β (lhs − 2 ≈ β² sin²η), so rounding
      // in lhs alone moves the bisection root by ~1e-7.
      const double tol = alpha < 1.0 ? 1e-9 : 5e-7;
      EXPECT_NEAR(beta_max(alpha, eta), beta_by_bisection(alpha, eta), tol)
          << alpha << " " << eta;
      EXPECT_NEAR(optimality_lhs(alpha, beta_max(alpha, eta), eta), 2.0, 1e-9);
    }
  }
}

TEST(build_geometry, orthogonal_example) {
  const MeasurementGeometry g = canonical_geometry(0.6, 0.8, kPi / 2);
  EXPECT_NEAR(g.p(), 0.5, 1e-15);
  EXPECT_LT((g.m().vec() - Vector3(0.8, 0, 0.6)).norm(), 1e-15);
  EXPECT_LT((g.l().vec() - Vector3(-0.8, 0, 0.6)).norm(), 1e-15);
  EXPECT_NEAR(std::cos(2 * g.epsilon()), g.m().dot(g.l()), 1e-15);
  EXPECT_NEAR(g.saturation_residual(), 0.0, 1e-12);
}

TEST(build_geometry, equal_sharpness_gives_quarter_pi) {
  for (double eta : {0.2, 1.0, kPi / 2, 2.0, 3.0}) {
    const double s = equal_sharpness(eta);
    const MeasurementGeometry g = canonical_geometry(s, s, eta);
    EXPECT_NEAR(g.epsilon(), kPi / 4, 1e-12) << eta;
  }
}

TEST(build_geometry, sharp_a_collapses_axes) {
  for (double eta : {0.0, 0.5, kPi / 2, 2.5}) {
    const MeasurementGeometry g = canonical_geometry(1.0, 0.0, eta);
    EXPECT_NEAR(g.p(), 0.5, 1e-15);
    EXPECT_LT((g.m().vec() - g.a().vec()).norm(), 1e-15);
    EXPECT_LT((g.l().vec() - g.a().vec()).norm(), 1e-15);
    EXPECT_NEAR(g.epsilon(), 0.0, 1e-15);
  }
}

TEST(build_geometry, commuting_endpoints) {
  const MeasurementGeometry same = canonical_geometry(1.0, 1.0, 0.0);
  EXPECT_EQ(same.p(), 1.0);
  EXPECT_LT((same.l().vec() - same.m().vec()).norm(), 1e-15);
  const MeasurementGeometry opposite = canonical_geometry(1.0, 1.0, kPi);
  EXPECT_EQ(opposite.p(), 0.0);
  EXPECT_LT((opposite.m().vec() - opposite.l().vec()).norm(), 1e-15);
  EXPECT_LT((opposite.l().vec() - Vector3(0, 0, 1)).norm(), 1e-15);
}

TEST(build_geometry, rejects_non_saturating) {
  try {
    canonical_geometry(0.9, 0.9, kPi / 2);
    FAIL() << "expected NonSaturatingError";
  } catch (const NonSaturatingError& e) {
    EXPECT_NEAR(e.residual(), 1.8 * std::sqrt(2.0) - 2.0, 1e-12);
    EXPECT_NE(std::string(e.what()).find("NonSaturating"), std::string::npos);
  }
  EXPECT_THROW(canonical_geometry(2.0 / 3, 2.0 / 3, kPi / 2), NonSaturatingError);
}

TEST(build_geometry, rejects_bad_sharpness) {
  EXPECT_THROW(canonical_geometry(1.1, 0.0, 1.0), ValidationError);
  EXPECT_THROW(canonical_geometry(-0.1, 1.0, 1.0), ValidationError);
  EXPECT_THROW(canonical_geometry(std::nan(""), 1.0, 1.0), ValidationError);
}

TEST(build_geometry, rotation_invariance) {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const double alpha = rng.uniform(), eta = kPi * rng.uniform();
    const double beta = beta_max(alpha, eta);
    const MeasurementGeometry canon = canonical_geometry(alpha, beta, eta);
    const UnitVector3 a = random_unit_vector(rng);
    const UnitVector3 b = vector_at_angle(a, eta, 2 * kPi * rng.uniform());
    const MeasurementGeometry g = build_geometry(a, b, alpha, beta);
    EXPECT_NEAR(g.p(), canon.p(), 1e-12);
    EXPECT_NEAR(g.epsilon(), canon.epsilon(), 1e-12);
    EXPECT_NEAR(g.eta(), eta, 1e-12);
    EXPECT_LT((g.frame().to_canonical(g.a().vec()) - canon.a().vec()).norm(), 1e-12);
    EXPECT_LT((g.frame().to_canonical(g.b().vec()) - canon.b().vec()).norm(), 1e-12);
    EXPECT_LT((g.frame().to_canonical(g.m().vec()) - canon.m().vec()).norm(), 1e-12);
    // The SU(2) map induces the rotation on Pauli operators.
    const QubitOperator& v = g.frame().su2;
    EXPECT_LT(max_abs_diff(v * pauli_dot(g.a()) * v.adjoint(), pauli_z()), 1e-12);
  }
}

TEST(build_povm, projective_limit) {
  const Povm4 povm = build_povm(canonical_geometry(1.0, 1.0, 0.0));
  EXPECT_LT(povm[Outcome::kPlusMinus].norm(), 1e-15);
  EXPECT_LT(povm[Outcome::kMinusPlus].norm(), 1e-15);
  EXPECT_LT(max_abs_diff(povm[Outcome::kPlusPlus], QubitOperator(QubitOperator{{1, 0}, {0, 0}})), 1e-15);
  EXPECT_LT(max_abs_diff(povm[Outcome::kMinusMinus], QubitOperator(QubitOperator{{0, 0}, {0, 1}})), 1e-15);
}

TEST(build_povm, orthogonal_example_traces) {
  const Povm4 povm = build_povm(canonical_geometry(0.6, 0.8, kPi / 2));
  for (Outcome o : kOutcomes) EXPECT_NEAR(povm[o].trace().real(), 0.5, 1e-15);
}

TEST(build_povm, complete_and_positive_for_random_geometries) {
  Rng rng(22);
  for (int k = 0; k < 500; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const Povm4 povm = build_povm(g);
    EXPECT_LT(completeness_residual(povm), 1e-12);
    EXPECT_GE(min_povm_eigenvalue(povm), -1e-12);
    EXPECT_NEAR(povm[Outcome::kPlusPlus].trace().real(), g.p(), 1e-12);
    EXPECT_NEAR(povm[Outcome::kPlusMinus].trace().real(), 1 - g.p(), 1e-12);
    for (Outcome o : kOutcomes) EXPECT_TRUE(is_hermitian(povm[o]));
  }
}

TEST(marginal_operators, projective_limit) {
  const MarginalOperators marg =
      marginal_operators(build_povm(canonical_geometry(1.0, 1.0, 0.0)));
  EXPECT_LT(max_abs_diff(marg.a[0], QubitOperator(QubitOperator{{1, 0}, {0, 0}})), 1e-15);
  EXPECT_LT(max_abs_diff(marg.a[1], QubitOperator(QubitOperator{{0, 0}, {0, 1}})), 1e-15);
}

TEST(marginal_operators, unsharp_a) {
  const MeasurementGeometry g = canonical_geometry(0.6, 0.8, kPi / 2);
  const MarginalOperators marg = marginal_operators(build_povm(g));
  EXPECT_LT(max_abs_diff(marg.a[0], 0.5 * (identity2() + 0.6 * pauli_dot(g.a()))), 1e-15);
  EXPECT_LT(max_abs_diff(marg.a[1], 0.5 * (identity2() - 0.6 * pauli_dot(g.a()))), 1e-15);
  EXPECT_LT(max_abs_diff(marg.b[0], 0.5 * (identity2() + 0.8 * pauli_dot(g.b()))), 1e-15);
}

TEST(marginal_operators, unbiased_for_random_states) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const MarginalOperators marg = marginal_operators(build_povm(g));
    const QubitOperator rho = random_density(rng);
    EXPECT_NEAR(expectation(marg.a[0] - marg.a[1], rho),
                g.alpha() * expectation(pauli_dot(g.a()), rho), 1e-12);
    EXPECT_NEAR(expectation(marg.b[0] - marg.b[1], rho),
                g.beta() * expectation(pauli_dot(g.b()), rho), 1e-12);
  }
}

TEST(joint_distribution, maximally_mixed) {
  Rng rng(24);
  for (int k = 0; k < 20; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const JointDistribution d = joint_distribution(0.5 * identity2(), build_povm(g));
    const double p = g.p();
    EXPECT_NEAR(d[Outcome::kPlusPlus], p / 2, 1e-14);
    EXPECT_NEAR(d[Outcome::kPlusMinus], (1 - p) / 2, 1e-14);
    EXPECT_NEAR(d[Outcome::kMinusPlus], (1 - p) / 2, 1e-14);
    EXPECT_NEAR(d[Outcome::kMinusMinus], p / 2, 1e-14);
  }
}

TEST(joint_distribution, projective_limit) {
  const MeasurementGeometry g = canonical_geometry(1.0, 1.0, 0.0);
  const QubitState m_plus = spin_eigenstates(g.m()).first;
  const JointDistribution d = joint_distribution(m_plus.density(), build_povm(g));
  EXPECT_NEAR(d[Outcome::kPlusPlus], 1.0, 1e-15);
  EXPECT_NEAR(d.total(), 1.0, 1e-15);
}

TEST(joint_distribution, orthogonal_example) {
  const MeasurementGeometry g = canonical_geometry(0.6, 0.8, kPi / 2);
  const QubitState a_plus = spin_eigenstates(g.a()).first;
  const JointDistribution d = joint_distribution(a_plus.density(), build_povm(g));
  const std::array<double, 4> expected = {0.4, 0.4, 0.1, 0.1};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(d.probabilities[k], expected[k], 1e-15);
  EXPECT_NEAR(d.marginal_a()[0], 0.8, 1e-15);
  EXPECT_NEAR(d.marginal_a()[1], 0.2, 1e-15);
  EXPECT_NEAR(d.marginal_b()[0], 0.5, 1e-15);
}

TEST(joint_distribution, rejects_non_density) {
  const Povm4 povm = build_povm(canonical_geometry(0.6, 0.8, kPi / 2));
  EXPECT_THROW(joint_distribution(identity2(), povm), ValidationError);
}

namespace {

void expect_within_five_sigma(const OutcomeCounts& counts,
                              const std::array<double, 4>& probs) {
  double n = 0;
  for (auto c : counts) n += static_cast<double>(c);
  for (int k = 0; k < 4; ++k) {
    const double sigma = std::sqrt(n * probs[k] * (1 - probs[k]));
    EXPECT_LE(std::abs(static_cast<double>(counts[k]) - n * probs[k]), 5 * sigma + 1e-9)
        << "outcome " << k;
  }
}

}  // namespace

TEST(sample_outcomes, maximally_mixed) {
  const MeasurementGeometry g = canonical_geometry(0.6, 0.8, kPi / 2);
  const OutcomeCounts counts = sample_outcomes(0.5 * identity2(), g, 1000000, 1);
  expect_within_five_sigma(counts, {0.25, 0.25, 0.25, 0.25});
}

TEST(sample_outcomes, orthogonal_example) {
  const MeasurementGeometry g = canonical_geometry(0.6, 0.8, kPi / 2);
  const QubitOperator rho = spin_eigenstates(g.a()).first.density();
  const OutcomeCounts counts = sample_outcomes(rho, g, 1000000, 2);
  expect_within_five_sigma(counts, {0.4, 0.4, 0.1, 0.1});
}

TEST(sample_outcomes, deterministic_per_seed) {
  const MeasurementGeometry g = canonical_geometry(0.3, beta_max(0.3, 1.0), 1.0);
  const QubitOperator rho = 0.5 * identity2();
  EXPECT_EQ(sample_outcomes(rho, g, 10000, 9), sample_outcomes(rho, g, 10000, 9));
  EXPECT_NE(sample_outcomes(rho, g, 10000, 9), sample_outcomes(rho, g, 10000, 10));
}

TEST(sample_outcomes, rejects_bad_inputs) {
  const MeasurementGeometry g = canonical_geometry(0.6, 0.8, kPi / 2);
  EXPECT_THROW(sample_outcomes(0.5 * identity2(), g, 0, 1), ValidationError);
  EXPECT_THROW(sample_outcomes(identity2(), g, 10, 1), ValidationError);
}

TEST(outcome, labels_and_signs) {
  EXPECT_EQ(label(Outcome::kPlusMinus), "+-");
  EXPECT_EQ(a_sign(Outcome::kMinusPlus), -1);
  EXPECT_EQ(b_sign(Outcome::kMinusPlus), 1);
  EXPECT_EQ(b_sign(Outcome::kMinusMinus), -1);
}
