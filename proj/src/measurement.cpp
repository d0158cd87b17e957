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

#include <algorithm>
#include <cmath>

#include "spinclone/rng.hpp"

namespace spinclone {
namespace {

Eigen::Matrix3d rotation_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix3d r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Eigen::Matrix3d rotation_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix3d r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

// exp(−iγσ_z/2) and exp(−iγσ_y/2): the qubit images of the rotations above.
QubitOperator su2_z(double angle) {
  QubitOperator u = QubitOperator::Zero();
  u(0, 0) = std::polar(1.0, -angle / 2);
  u(1, 1) = std::polar(1.0, angle / 2);
  return u;
}

QubitOperator su2_y(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  QubitOperator u;
  u << c, -s, s, c;
  return u;
}

double azimuth(double x, double y) {
  return std::hypot(x, y) > 0.0 ? std::atan2(y, x) : 0.0;
}

void check_sharpness(const char* name, double value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw ValidationError(std::string("sharpness ") + name +
                          " must lie in [0, 1]");
  }
}

}  // namespace

std::string_view label(Outcome o) {
  switch (o) {
    case Outcome::kPlusPlus:
      return "++";
    case Outcome::kPlusMinus:
      return "+-";
    case Outcome::kMinusPlus:
      return "-+";
    case Outcome::kMinusMinus:
      return "--";
  }
  return "?";
}

CanonicalFrame canonical_frame(const UnitVector3& a, const UnitVector3& b) {
  const double theta = std::atan2(std::hypot(a.x(), a.y()), a.z());
  const double phi = azimuth(a.x(), a.y());
  const Eigen::Matrix3d first = rotation_y(-theta) * rotation_z(-phi);
  const Vector3 b1 = first * b.vec();
  const double chi = azimuth(b1.x(), b1.y());

  CanonicalFrame frame;
  frame.rotation = rotation_z(-chi) * first;
  frame.su2 = su2_z(-chi) * su2_y(-theta) * su2_z(-phi);
  return frame;
}

double optimality_lhs(double alpha, double beta, double eta) {
  const double sum2 = alpha * alpha + beta * beta;
  const double cross = 2.0 * alpha * beta * std::cos(eta);
  return std::sqrt(std::max(0.0, sum2 + cross)) +
         std::sqrt(std::max(0.0, sum2 - cross));
}

double beta_max(double alpha, double eta) {
  check_sharpness("alpha", alpha);
  const double num = 1.0 - alpha * alpha;
  const double s = std::sin(eta);
  // 1 − α²cos²η written without cancellation.
  const double den = num + alpha * alpha * s * s;
  if (den <= 0.0 || (num == 0.0 && std::abs(s) <= kTolerance)) return 1.0;
  return std::min(1.0, std::sqrt(num / den));
}

MeasurementGeometry build_geometry(const UnitVector3& a, const UnitVector3& b,
                                   double alpha, double beta) {
  check_sharpness("alpha", alpha);
  check_sharpness("beta", beta);

  const Vector3 sum = alpha * a.vec() + beta * b.vec();
  const Vector3 diff = alpha * a.vec() - beta * b.vec();
  const double sum_norm = sum.norm();
  const double diff_norm = diff.norm();
  const double residual = sum_norm + diff_norm - 2.0;
  if (std::abs(residual) > kSaturationTolerance) {
    throw NonSaturatingError(residual);
  }

  const bool has_m = sum_norm > kTolerance;
  const bool has_l = diff_norm > kTolerance;
  if (!has_m && !has_l) {
    throw DegenerateAxisError("both m and l are undefined (alpha = beta = 0)");
  }
  const UnitVector3 m = UnitVector3::normalized(has_m ? sum : diff);
  const UnitVector3 l = UnitVector3::normalized(has_l ? diff : sum);

  MeasurementGeometry g(a, b, m, l);
  g.alpha_ = alpha;
  g.beta_ = beta;
  g.eta_ = std::atan2(a.vec().cross(b.vec()).norm(), a.dot(b));
  g.residual_ = residual;
  // Equal to ½|αa+βb| on the frontier; this form keeps p + (1−p) = 1 exact.
  g.p_ = !has_m ? 0.0 : !has_l ? 1.0 : sum_norm / (sum_norm + diff_norm);
  g.epsilon_ =
      0.5 * std::atan2(m.vec().cross(l.vec()).norm(), m.dot(l));
  g.frame_ = canonical_frame(a, b);

  // In the canonical frame m has x ≥ 0 and l has x ≤ 0. Taking |x| (never
  // −0.0) pins the branch at the poles: l = −a sits at −π, its limit as
  // η → 0⁺.
  const Vector3 mc = g.frame_.to_canonical(m.vec());
  const Vector3 lc = g.frame_.to_canonical(l.vec());
  g.m_angle_ = std::atan2(std::abs(mc.x()), mc.z());
  g.l_angle_ = -std::atan2(std::abs(lc.x()), lc.z());
  return g;
}

MeasurementGeometry canonical_geometry(double alpha, double beta, double eta) {
  return build_geometry(UnitVector3(0, 0, 1),
                        UnitVector3(std::sin(eta), 0, std::cos(eta)), alpha,
                        beta);
}

MeasurementGeometry optimal_geometry(double alpha, double eta) {
  return canonical_geometry(alpha, beta_max(alpha, eta), eta);
}

Povm4 build_povm(const MeasurementGeometry& g) {
  const QubitOperator one = identity2();
  const QubitOperator m = pauli_dot(g.m());
  const QubitOperator l = pauli_dot(g.l());
  const double p = g.p();
  Povm4 povm;
  povm.elements[index(Outcome::kPlusPlus)] = 0.5 * p * (one + m);
  povm.elements[index(Outcome::kPlusMinus)] = 0.5 * (1 - p) * (one + l);
  povm.elements[index(Outcome::kMinusPlus)] = 0.5 * (1 - p) * (one - l);
  povm.elements[index(Outcome::kMinusMinus)] = 0.5 * p * (one - m);
  return povm;
}

double completeness_residual(const Povm4& povm) {
  QubitOperator total = QubitOperator::Zero();
  for (const auto& e : povm.elements) total += e;
  return max_abs_diff(total, identity2());
}

double min_povm_eigenvalue(const Povm4& povm) {
  double lowest = min_eigenvalue(povm.elements[0]);
  for (const auto& e : povm.elements) lowest = std::min(lowest, min_eigenvalue(e));
  return lowest;
}

MarginalOperators marginal_operators(const Povm4& povm) {
  using enum Outcome;
  return {
      {povm[kPlusPlus] + povm[kPlusMinus], povm[kMinusMinus] + povm[kMinusPlus]},
      {povm[kPlusPlus] + povm[kMinusPlus], povm[kMinusMinus] + povm[kPlusMinus]},
  };
}

std::array<double, 2> JointDistribution::marginal_a() const {
  return {probabilities[0] + probabilities[1],
          probabilities[2] + probabilities[3]};
}

std::array<double, 2> JointDistribution::marginal_b() const {
  return {probabilities[0] + probabilities[2],
          probabilities[1] + probabilities[3]};
}

double JointDistribution::total() const {
  return probabilities[0] + probabilities[1] + probabilities[2] +
         probabilities[3];
}

JointDistribution joint_distribution(const QubitOperator& rho,
                                     const Povm4& povm) {
  if (!is_density(rho)) {
    throw ValidationError("joint_distribution: rho is not a density operator");
  }
  JointDistribution dist;
  for (Outcome o : kOutcomes) {
    dist.probabilities[index(o)] = (rho * povm[o]).trace().real();
  }
  return dist;
}

OutcomeCounts sample_outcomes(const QubitOperator& rho,
                              const MeasurementGeometry& g, std::uint64_t n,
                              std::uint64_t seed) {
  if (n == 0) throw ValidationError("sample_outcomes: n must be >= 1");
  if (!is_density(rho)) {
    throw ValidationError("sample_outcomes: rho is not a density operator");
  }
  const Vector3 c = bloch_from_density(rho);
  const double up_m = 0.5 * (1.0 + g.m().dot(c));
  const double up_l = 0.5 * (1.0 + g.l().dot(c));

  Rng rng(seed);
  OutcomeCounts counts{};
  for (std::uint64_t shot = 0; shot < n; ++shot) {
    const bool along_m = rng.uniform() < g.p();
    const bool up = rng.uniform() < (along_m ? up_m : up_l);
    Outcome o;
    if (along_m) {
      o = up ? Outcome::kPlusPlus : Outcome::kMinusMinus;
    } else {
      o = up ? Outcome::kPlusMinus : Outcome::kMinusPlus;
    }
    ++counts[index(o)];
  }
  return counts;
}

}  // namespace spinclone
