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

// Small fixed-size complex linear algebra for one and two qubits.
//
// Two-qubit amplitudes are ordered (++, +-, -+, --) with qubit 1 as the slow
// index, i.e. index = 2 * i1 + i2 where i = 0 for "+" and 1 for "-".

#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "spinclone/errors.hpp"

namespace spinclone {

#ifndef SPINCLONE_TOLERANCE
#define SPINCLONE_TOLERANCE 1e-12
#endif

/// Default tolerance for every validation check in the library.
inline constexpr double kTolerance = SPINCLONE_TOLERANCE;

using Complex = std::complex<double>;
using Vector3 = Eigen::Vector3d;
using QubitOperator = Eigen::Matrix2cd;
using TwoQubitOperator = Eigen::Matrix4cd;

/// A real 3-vector of unit length.
class UnitVector3 {
 public:
  /// Throws ValidationError unless x²+y²+z² = 1 within kTolerance.
  UnitVector3(double x, double y, double z);
  explicit UnitVector3(const Vector3& v) : UnitVector3(v.x(), v.y(), v.z()) {}

  /// Rescales a nonzero vector onto the sphere.
  static UnitVector3 normalized(const Vector3& v);
  /// (sin θ cos φ, sin θ sin φ, cos θ).
  static UnitVector3 from_angles(double theta, double phi);

  const Vector3& vec() const noexcept { return v_; }
  double x() const noexcept { return v_.x(); }
  double y() const noexcept { return v_.y(); }
  double z() const noexcept { return v_.z(); }
  double dot(const UnitVector3& o) const noexcept { return v_.dot(o.v_); }
  double dot(const Vector3& o) const noexcept { return v_.dot(o); }
  UnitVector3 operator-() const { return UnitVector3(-v_); }

 private:
  Vector3 v_;
};

/// A normalized single-qubit pure state in the computational (σ_z) basis.
class QubitState {
 public:
  /// Throws ValidationError unless |plus|² + |minus|² = 1 within kTolerance.
  QubitState(Complex plus, Complex minus);
  explicit QubitState(const Eigen::Vector2cd& amps)
      : QubitState(amps(0), amps(1)) {}

  /// (cos θ/2, e^{iφ} sin θ/2): the state with Bloch vector at polar angle θ
  /// and azimuth φ.
  static QubitState from_bloch_angles(double theta, double phi);

  const Eigen::Vector2cd& amplitudes() const noexcept { return amps_; }
  Complex operator[](int i) const { return amps_(i); }

  QubitOperator density() const { return amps_ * amps_.adjoint(); }
  Vector3 bloch() const;

 private:
  Eigen::Vector2cd amps_;
};

/// A normalized two-qubit pure state in the (++, +-, -+, --) ordering.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Eigen::Vector4cd& amps);

  const Eigen::Vector4cd& amplitudes() const noexcept { return amps_; }
  Complex operator[](int i) const { return amps_(i); }

  TwoQubitOperator density() const { return amps_ * amps_.adjoint(); }

 private:
  Eigen::Vector4cd amps_;
};

enum class Subsystem { kFirst, kSecond };

QubitOperator identity2();
QubitOperator pauli_x();
QubitOperator pauli_y();
QubitOperator pauli_z();

/// n·σ. Hermitian, traceless, eigenvalues ±1.
QubitOperator pauli_dot(const UnitVector3& n);

/// c·σ for an arbitrary real vector (no unit-length requirement).
QubitOperator bloch_operator(const Vector3& c);

/// Eigenstates (|n+⟩, |n−⟩) of n·σ.
///
/// With n = (sin θ cos φ, sin θ sin φ, cos θ):
///   |n+⟩ = (cos θ/2, e^{iφ} sin θ/2),  |n−⟩ = (−e^{−iφ} sin θ/2, cos θ/2).
/// At the poles φ is taken as 0. Amplitudes are real whenever n lies in the
/// x–z plane.
std::pair<QubitState, QubitState> spin_eigenstates(const UnitVector3& n);

Eigen::Vector4cd kron(const Eigen::Vector2cd& u, const Eigen::Vector2cd& v);
TwoQubitOperator kron(const QubitOperator& a, const QubitOperator& b);

TwoQubitState tensor(const QubitState& s1, const QubitState& s2);

/// Reduced state of the subsystem `keep`. Throws ValidationError if rho is
/// not a density operator.
QubitOperator partial_trace(const TwoQubitOperator& rho, Subsystem keep);

/// Same as partial_trace without the input validation; for hot loops whose
/// inputs are density operators by construction.
QubitOperator partial_trace_unchecked(const TwoQubitOperator& rho,
                                      Subsystem keep);

/// Reduced density operator of one qubit of a pure two-qubit state.
QubitOperator reduced_density(const Eigen::Vector4cd& amps, Subsystem keep);

/// c_i = Tr(ρ σ_i).
Vector3 bloch_from_density(const QubitOperator& rho);

/// ½(1 + c·σ). Throws ValidationError if |c| > 1 + kTolerance.
QubitOperator density_from_bloch(const Vector3& c);

bool is_hermitian(const QubitOperator& m, double tol = kTolerance);
bool is_hermitian(const TwoQubitOperator& m, double tol = kTolerance);
bool is_density(const QubitOperator& m, double tol = kTolerance);
bool is_density(const TwoQubitOperator& m, double tol = kTolerance);

/// Max-abs entry of U†U − 1.
double unitarity_residual(const TwoQubitOperator& u);
/// Smallest eigenvalue of a Hermitian 2×2 operator.
double min_eigenvalue(const QubitOperator& m);

/// Max-abs entry of a − b.
template <typename Derived, typename Other>
double max_abs_diff(const Eigen::MatrixBase<Derived>& a,
                    const Eigen::MatrixBase<Other>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace spinclone
