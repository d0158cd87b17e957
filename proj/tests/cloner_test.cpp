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

#include "spinclone/cloner.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "spinclone/errors.hpp"
#include "spinclone/random_inputs.hpp"
#include "spinclone/rng.hpp"

using namespace spinclone;

namespace {

constexpr double kPi = std::numbers::pi;

MeasurementGeometry orthogonal_example() {
  return canonical_geometry(0.6, 0.8, kPi / 2);
}

MeasurementGeometry projective_geometry() {
  return canonical_geometry(1.0, 1.0, 0.0);
}

double born(const QubitState& psi, const QubitOperator& op) {
  return psi.amplitudes().dot(op * psi.amplitudes()).real();
}

// ⟨φ|ψ, b+⟩ squared against ⟨ψ|Π|ψ⟩.
double naimark_mismatch(const MeasurementGeometry& g, const QubitState& psi) {
  const NaimarkBasis basis = naimark_basis(g);
  const Povm4 povm = build_povm(g);
  const Eigen::Vector4cd in = kron(psi.amplitudes(), blank_state(g).amplitudes());
  double worst = 0;
  for (Outcome o : kOutcomes) {
    worst = std::max(worst, std::abs(std::norm(basis[o].amplitudes().dot(in)) -
                                     born(psi, povm[o])));
  }
  return worst;
}

// Transverse axis n ⊥ a, b used by the cloner.
Vector3 transverse_axis(const MeasurementGeometry& g) {
  return g.frame().from_canonical(Vector3(Vector3::UnitY()));
}

}  // namespace

TEST(naimark_basis, orthogonal_example_is_orthonormal) {
  const NaimarkBasis basis = naimark_basis(orthogonal_example());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex overlap = basis.vectors[i].amplitudes().dot(basis.vectors[j].amplitudes());
      EXPECT_LT(std::abs(overlap - (i == j ? 1.0 : 0.0)), 1e-12) << i << j;
    }
  }
}

TEST(naimark_basis, projective_limit) {
  const MeasurementGeometry g = projective_geometry();
  const NaimarkBasis basis = naimark_basis(g);
  const auto [a_plus, a_minus] = spin_eigenstates(g.a());
  const auto [b_plus, b_minus] = spin_eigenstates(g.b());
  EXPECT_NEAR(std::abs(tensor(a_plus, b_plus).amplitudes().dot(
                  basis[Outcome::kPlusPlus].amplitudes())),
              1.0, 1e-15);
  EXPECT_NEAR(std::abs(tensor(a_minus, b_plus).amplitudes().dot(
                  basis[Outcome::kMinusMinus].amplitudes())),
              1.0, 1e-15);
  const TwoQubitOperator keep_b_plus = kron(identity2(), b_plus.density());
  EXPECT_LT((keep_b_plus * basis[Outcome::kPlusMinus].amplitudes()).norm(), 1e-15);
  EXPECT_LT((keep_b_plus * basis[Outcome::kMinusPlus].amplitudes()).norm(), 1e-15);
}

TEST(naimark_basis, orthonormal_over_grid) {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const MeasurementGeometry g = optimal_geometry(i / 40.0, kPi * j / 40.0);
      EXPECT_LT(orthonormality_residual(naimark_basis(g)), 1e-12) << i << " " << j;
    }
  }
}

TEST(naimark_basis, reproduces_povm_in_orthogonal_example) {
  Rng rng(31);
  const MeasurementGeometry g = orthogonal_example();
  for (int k = 0; k < 100; ++k) EXPECT_LT(naimark_mismatch(g, haar_random_state(rng)), 1e-10);
}

TEST(naimark_basis, reproduces_povm_for_random_geometries) {
  Rng rng(32);
  for (int k = 0; k < 500; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    EXPECT_LT(naimark_mismatch(g, haar_random_state(rng)), 1e-10);
  }
}

TEST(naimark_basis, sign_error_is_detected) {
  DilationSigns flipped;
  flipped.tail[1] = -flipped.tail[1];
  const MeasurementGeometry g = orthogonal_example();
  EXPECT_GT(orthonormality_residual(naimark_basis_unchecked(g, flipped)), 0.1);
  EXPECT_LT(orthonormality_residual(naimark_basis_unchecked(g)), 1e-12);
}

TEST(clone_unitary, unitary_for_random_geometries) {
  Rng rng(33);
  for (int k = 0; k < 500; ++k) {
    EXPECT_LT(unitarity_residual(clone_unitary(random_optimal_geometry(rng))), 1e-12);
  }
}

TEST(clone_unitary, maps_basis_to_signed_products) {
  const MeasurementGeometry g = canonical_geometry(0.3, beta_max(0.3, 1.0), 1.0);
  const TwoQubitOperator u = clone_unitary(g);
  const NaimarkBasis basis = naimark_basis(g);
  const auto products = product_basis(g);
  const std::array<double, 4> signs = {+1, +1, -1, -1};
  for (int k = 0; k < 4; ++k) {
    EXPECT_LT(max_abs_diff(u * basis.vectors[k].amplitudes(),
                           signs[k] * products[k].amplitudes()),
              1e-14);
  }
}

// With the eigenvector phases used here the projective machine copies the
// a-basis as c₊|a+,b+⟩ + c₋|a−,b−⟩.
TEST(clone_unitary, projective_limit_copies_a_basis) {
  const MeasurementGeometry g = projective_geometry();
  const auto [a_plus, a_minus] = spin_eigenstates(g.a());
  const auto [b_plus, b_minus] = spin_eigenstates(g.b());
  const Complex cp(0.6, 0.1), cm(0.3, -std::sqrt(1 - 0.37 - 0.09));
  const Eigen::Vector2cd psi = cp * a_plus.amplitudes() + cm * a_minus.amplitudes();
  const Eigen::Vector4cd out = clone_unitary(g) * kron(psi, blank_state(g).amplitudes());
  const Eigen::Vector4cd expected = cp * kron(a_plus.amplitudes(), b_plus.amplitudes()) +
                                    cm * kron(a_minus.amplitudes(), b_minus.amplitudes());
  EXPECT_LT(max_abs_diff(out, expected), 1e-15);
}

TEST(clone_pure, projective_limit) {
  const MeasurementGeometry g = projective_geometry();
  const CloneOutput out = clone_pure(g, spin_eigenstates(g.m()).first);
  EXPECT_NEAR(std::norm(out.amplitudes[0]), 1.0, 1e-15);
}

TEST(clone_pure, orthogonal_example_weights) {
  const MeasurementGeometry g = orthogonal_example();
  const CloneOutput out = clone_pure(g, spin_eigenstates(g.a()).first);
  const std::array<double, 4> expected = {0.4, 0.4, 0.1, 0.1};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(std::norm(out.amplitudes[k]), expected[k], 1e-14);
    EXPECT_NEAR(out.statistics.probabilities[k], expected[k], 1e-14);
  }
}

TEST(clone_pure, reduced_state_contracts_a_component) {
  const double s = 1 / std::sqrt(2.0);
  const MeasurementGeometry g = canonical_geometry(s, s, kPi / 2);
  const QubitState psi = spin_eigenstates(g.a()).first;
  const CloneOutput out = clone_pure(g, psi);
  const TwoQubitOperator joint = out.joint_state->density();
  const Vector3 ca = bloch_from_density(partial_trace(joint, Subsystem::kFirst));
  EXPECT_NEAR(g.a().dot(ca), s * g.a().dot(psi.bloch()), 1e-12);
  EXPECT_LT((ca - out.bloch_a).norm(), 1e-14);
}

TEST(clone_pure, weights_match_born_rule) {
  Rng rng(34);
  for (int k = 0; k < 500; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const QubitState psi = haar_random_state(rng);
    const CloneOutput out = clone_pure(g, psi);
    const JointDistribution d = joint_distribution(psi.density(), build_povm(g));
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(std::norm(out.amplitudes[i]), d.probabilities[i], 1e-10);
    }
  }
}

TEST(clone_pure, bloch_relations) {
  Rng rng(35);
  for (int k = 0; k < 1000; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const QubitState psi = haar_random_state(rng);
    const CloneOutput out = clone_pure(g, psi);
    const Vector3 c = psi.bloch();
    const Vector3 n = transverse_axis(g);
    EXPECT_NEAR(n.dot(g.a().vec()), 0.0, 1e-12);
    EXPECT_NEAR(n.dot(g.b().vec()), 0.0, 1e-12);
    EXPECT_NEAR(g.a().dot(out.bloch_a), g.alpha() * g.a().dot(c), 1e-10);
    EXPECT_NEAR(g.b().dot(out.bloch_b), g.beta() * g.b().dot(c), 1e-10);
    EXPECT_NEAR(n.dot(out.bloch_a), std::sqrt(1 - g.beta() * g.beta()) * n.dot(c), 1e-10);
    EXPECT_NEAR(n.dot(out.bloch_b), 0.0, 1e-10);
  }
}

TEST(clone_pure, rotation_covariance) {
  Rng rng(36);
  for (int k = 0; k < 100; ++k) {
    const double alpha = rng.uniform(), eta = kPi * rng.uniform();
    const double beta = beta_max(alpha, eta);
    const MeasurementGeometry canon = canonical_geometry(alpha, beta, eta);
    const UnitVector3 a = random_unit_vector(rng);
    const MeasurementGeometry g =
        build_geometry(a, vector_at_angle(a, eta, 2 * kPi * rng.uniform()), alpha, beta);
    const QubitState psi = haar_random_state(rng);
    const QubitState psi_rot(g.frame().from_canonical(psi.amplitudes()));
    const CloneOutput ref = clone_pure(canon, psi);
    const CloneOutput out = clone_pure(g, psi_rot);
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(out.statistics.probabilities[i], ref.statistics.probabilities[i], 1e-12);
    }
    EXPECT_LT((g.frame().to_canonical(out.bloch_a) - ref.bloch_a).norm(), 1e-12);
    EXPECT_LT((g.frame().to_canonical(out.bloch_b) - ref.bloch_b).norm(), 1e-12);
  }
}

TEST(clone_mixed, pure_input_matches_clone_pure) {
  Rng rng(37);
  for (int k = 0; k < 50; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const QubitState psi = haar_random_state(rng);
    const CloneOutput pure = clone_pure(g, psi);
    const CloneOutput mixed = clone_mixed(g, psi.density());
    EXPECT_LT(max_abs_diff(mixed.joint, pure.joint_state->density()), 1e-14);
  }
}

TEST(clone_mixed, maximally_mixed_statistics) {
  Rng rng(38);
  for (int k = 0; k < 20; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const CloneOutput out = clone_mixed(g, 0.5 * identity2());
    const double p = g.p();
    EXPECT_NEAR(out.statistics[Outcome::kPlusPlus], p / 2, 1e-14);
    EXPECT_NEAR(out.statistics[Outcome::kPlusMinus], (1 - p) / 2, 1e-14);
    EXPECT_NEAR(out.statistics[Outcome::kMinusPlus], (1 - p) / 2, 1e-14);
    EXPECT_NEAR(out.statistics[Outcome::kMinusMinus], p / 2, 1e-14);
  }
}

TEST(clone_mixed, random_inputs_stay_normalized) {
  Rng rng(39);
  for (int k = 0; k < 100; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const QubitOperator rho = random_density(rng);
    const CloneOutput out = clone_mixed(g, rho);
    EXPECT_NEAR(out.joint.trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(is_density(out.joint));
    const Vector3 c = bloch_from_density(rho);
    EXPECT_NEAR(g.a().dot(out.bloch_a), g.alpha() * g.a().dot(c), 1e-10);
    EXPECT_NEAR(g.b().dot(out.bloch_b), g.beta() * g.b().dot(c), 1e-10);
  }
  EXPECT_THROW(clone_mixed(orthogonal_example(), identity2()), ValidationError);
}

TEST(measure_and_prepare, diagonal_in_product_basis) {
  Rng rng(40);
  for (int k = 0; k < 50; ++k) {
    const MeasurementGeometry g = random_optimal_geometry(rng);
    const QubitState psi = haar_random_state(rng);
    const TwoQubitOperator rho = measure_and_prepare(g, psi);
    const auto products = product_basis(g);
    const JointDistribution d = joint_distribution(psi.density(), build_povm(g));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const Complex e = products[i].amplitudes().dot(rho * products[j].amplitudes());
        EXPECT_LT(std::abs(e - (i == j ? d.probabilities[i] : 0.0)), 1e-14);
      }
    }
    const Vector3 cb = bloch_from_density(partial_trace(rho, Subsystem::kSecond));
    EXPECT_NEAR(g.b().dot(cb), g.beta() * g.b().dot(psi.bloch()), 1e-12);
  }
}

TEST(measure_and_prepare, orthogonal_example_diagonal) {
  const MeasurementGeometry g = orthogonal_example();
  const TwoQubitOperator rho = measure_and_prepare(g, spin_eigenstates(g.a()).first);
  const auto products = product_basis(g);
  const std::array<double, 4> expected = {0.4, 0.4, 0.1, 0.1};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(products[k].amplitudes().dot(rho * products[k].amplitudes()).real(),
                expected[k], 1e-14);
  }
}

TEST(cloner, blank_is_b_plus) {
  const MeasurementGeometry g = canonical_geometry(0.3, beta_max(0.3, 1.0), 1.0);
  const Cloner cloner(g);
  EXPECT_LT(max_abs_diff(cloner.blank(), spin_eigenstates(g.b()).first.amplitudes()), 1e-15);
  EXPECT_LT(max_abs_diff(cloner.a_states()[1], spin_eigenstates(g.a()).second.amplitudes()), 1e-15);
}
