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

// Optimal joint measurement of two qubit spin components.
//
// A joint measurement of a·σ and b·σ with sharpnesses α, β is optimal when
// |αa + βb| + |αa − βb| = 2. It is realised by measuring spin along
//   m = (αa + βb) / (2p)  with probability p = ½|αa + βb|,
//   l = (αa − βb) / (2(1−p)) otherwise,
// reading "+m" as (+,+), "−m" as (−,−), "+l" as (+,−) and "−l" as (−,+).

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "spinclone/linalg.hpp"

namespace spinclone {

/// Inputs must satisfy |αa+βb| + |αa−βb| = 2 within this bound.
inline constexpr double kSaturationTolerance = 1e-9;

/// Joint outcome labels, ordered (++, +−, −+, −−): first sign for a, second
/// for b. The order matches the two-qubit amplitude ordering.
enum class Outcome : int {
  kPlusPlus = 0,
  kPlusMinus = 1,
  kMinusPlus = 2,
  kMinusMinus = 3,
};

inline constexpr std::array<Outcome, 4> kOutcomes = {
    Outcome::kPlusPlus, Outcome::kPlusMinus, Outcome::kMinusPlus,
    Outcome::kMinusMinus};

constexpr int index(Outcome o) { return static_cast<int>(o); }
constexpr int a_sign(Outcome o) { return index(o) < 2 ? 1 : -1; }
constexpr int b_sign(Outcome o) { return index(o) % 2 == 0 ? 1 : -1; }
std::string_view label(Outcome o);

/// Rigid rotation taking a to ẑ and b into the x–z half-plane with x ≥ 0.
///
/// `rotation` acts on Bloch vectors; `su2` is the matching qubit unitary, so
/// su2 (n·σ) su2† = (rotation n)·σ. Inputs already in that frame get the
/// identity.
struct CanonicalFrame {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  QubitOperator su2 = QubitOperator::Identity();

  Vector3 to_canonical(const Vector3& v) const { return rotation * v; }
  Vector3 from_canonical(const Vector3& v) const {
    return rotation.transpose() * v;
  }
  /// Canonical-frame amplitudes to original-frame amplitudes.
  Eigen::Vector2cd from_canonical(const Eigen::Vector2cd& s) const {
    return su2.adjoint() * s;
  }
  Eigen::Vector2cd to_canonical(const Eigen::Vector2cd& s) const {
    return su2 * s;
  }
};

CanonicalFrame canonical_frame(const UnitVector3& a, const UnitVector3& b);

/// The full parameter set of an optimal joint measurement. Construct with
/// build_geometry (or the canonical/optimal helpers).
class MeasurementGeometry {
 public:
  const UnitVector3& a() const noexcept { return a_; }
  const UnitVector3& b() const noexcept { return b_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  /// Angle between a and b, in [0, π].
  double eta() const noexcept { return eta_; }
  const UnitVector3& m() const noexcept { return m_; }
  const UnitVector3& l() const noexcept { return l_; }
  /// Probability of measuring along m.
  double p() const noexcept { return p_; }
  /// Half the angle between m and l, in [0, π/2].
  double epsilon() const noexcept { return epsilon_; }
  /// |αa+βb| + |αa−βb| − 2 for the inputs as given.
  double saturation_residual() const noexcept { return residual_; }

  const CanonicalFrame& frame() const noexcept { return frame_; }
  /// In-plane angles of m and l in the canonical frame, measured from a
  /// toward b. m_angle ∈ [0, π], l_angle ∈ [−π, 0].
  double m_angle() const noexcept { return m_angle_; }
  double l_angle() const noexcept { return l_angle_; }

 private:
  friend MeasurementGeometry build_geometry(const UnitVector3&,
                                            const UnitVector3&, double,
                                            double);
  MeasurementGeometry(UnitVector3 a, UnitVector3 b, UnitVector3 m,
                      UnitVector3 l)
      : a_(a), b_(b), m_(m), l_(l) {}

  UnitVector3 a_, b_, m_, l_;
  double alpha_ = 0, beta_ = 0, eta_ = 0, p_ = 0, epsilon_ = 0;
  double residual_ = 0;
  double m_angle_ = 0, l_angle_ = 0;
  CanonicalFrame frame_;
};

/// Left-hand side |αa+βb| + |αa−βb| of the optimality bound for unit vectors
/// at angle eta.
double optimality_lhs(double alpha, double beta, double eta);

/// Largest β with optimality_lhs(α, β, η) ≤ 2, i.e.
/// β² = (1−α²) / (1−α² cos²η). Returns 1 in the commuting case α = 1 with
/// a ∥ b (η = 0 or π), where the formula is 0/0 and both can be sharp.
double beta_max(double alpha, double eta);

/// Throws ValidationError for α, β outside [0, 1], NonSaturatingError off the
/// frontier, DegenerateAxisError when neither m nor l is defined.
/// When only one axis is defined (p = 0 or 1) the other is set equal to it;
/// it carries zero weight.
MeasurementGeometry build_geometry(const UnitVector3& a, const UnitVector3& b,
                                   double alpha, double beta);

/// a = ẑ, b = (sin η, 0, cos η).
MeasurementGeometry canonical_geometry(double alpha, double beta, double eta);

/// canonical_geometry with β = beta_max(α, η).
MeasurementGeometry optimal_geometry(double alpha, double eta);

/// The four-outcome joint measurement:
///   Π_{±±} = (p/2)(1 ± m·σ),  Π_{±∓} = ((1−p)/2)(1 ± l·σ).
struct Povm4 {
  std::array<QubitOperator, 4> elements;

  const QubitOperator& operator[](Outcome o) const {
    return elements[index(o)];
  }
};

Povm4 build_povm(const MeasurementGeometry& g);

/// Max-abs entry of ΣΠ − 1.
double completeness_residual(const Povm4& povm);
/// Smallest eigenvalue over all elements.
double min_povm_eigenvalue(const Povm4& povm);

/// Two-outcome marginal measurements, each ordered (+, −).
struct MarginalOperators {
  std::array<QubitOperator, 2> a;
  std::array<QubitOperator, 2> b;
};

/// Π^{αa}_± = Π_{±±} + Π_{±∓},  Π^{βb}_± = Π_{±±} + Π_{∓±}.
MarginalOperators marginal_operators(const Povm4& povm);

struct JointDistribution {
  std::array<double, 4> probabilities{};

  double operator[](Outcome o) const { return probabilities[index(o)]; }
  /// (P(a=+), P(a=−)).
  std::array<double, 2> marginal_a() const;
  /// (P(b=+), P(b=−)).
  std::array<double, 2> marginal_b() const;
  double total() const;
};

/// Born-rule probabilities Tr(ρΠ). Throws ValidationError if rho is not a
/// density operator.
JointDistribution joint_distribution(const QubitOperator& rho,
                                     const Povm4& povm);

using OutcomeCounts = std::array<std::uint64_t, 4>;

/// Simulates n runs of the measurement procedure on rho: pick m with
/// probability p (else l), then measure spin along the chosen axis. Uses Rng
/// seeded with `seed`; identical inputs give identical counts.
OutcomeCounts sample_outcomes(const QubitOperator& rho,
                              const MeasurementGeometry& g, std::uint64_t n,
                              std::uint64_t seed);

}  // namespace spinclone
