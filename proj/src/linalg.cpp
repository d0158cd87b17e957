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

#include "spinclone/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace spinclone {
namespace {

constexpr Complex kI{0.0, 1.0};

std::string describe(const char* what, double value) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s (got %.17g)", what, value);
  return buf;
}

template <typename Matrix>
bool hermitian_impl(const Matrix& m, double tol) {
  return max_abs_diff(m, m.adjoint()) <= tol;
}

}  // namespace

UnitVector3::UnitVector3(double x, double y, double z) : v_(x, y, z) {
  const double n2 = v_.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kTolerance) {
    throw ValidationError(describe("UnitVector3: squared norm must be 1", n2));
  }
}

UnitVector3 UnitVector3::normalized(const Vector3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ValidationError("UnitVector3::normalized: zero or non-finite vector");
  }
  return UnitVector3(v / n);
}

UnitVector3 UnitVector3::from_angles(double theta, double phi) {
  return UnitVector3(std::sin(theta) * std::cos(phi),
                     std::sin(theta) * std::sin(phi), std::cos(theta));
}

QubitState::QubitState(Complex plus, Complex minus) : amps_(plus, minus) {
  const double n2 = amps_.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kTolerance) {
    throw ValidationError(describe("QubitState: norm must be 1", n2));
  }
}

QubitState QubitState::from_bloch_angles(double theta, double phi) {
  return QubitState(std::cos(theta / 2),
                    std::polar(std::sin(theta / 2), phi));
}

Vector3 QubitState::bloch() const {
  // ⟨σ⟩ for a pure state, written out to avoid forming the density.
  const Complex cross = std::conj(amps_(0)) * amps_(1);
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(amps_(0)) - std::norm(amps_(1))};
}

TwoQubitState::TwoQubitState(const Eigen::Vector4cd& amps) : amps_(amps) {
  const double n2 = amps_.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kTolerance) {
    throw ValidationError(describe("TwoQubitState: norm must be 1", n2));
  }
}

QubitOperator identity2() { return QubitOperator::Identity(); }

QubitOperator pauli_x() {
  QubitOperator m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

QubitOperator pauli_y() {
  QubitOperator m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

QubitOperator pauli_z() {
  QubitOperator m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

QubitOperator bloch_operator(const Vector3& c) {
  QubitOperator m;
  m << c.z(), Complex(c.x(), -c.y()), Complex(c.x(), c.y()), -c.z();
  return m;
}

QubitOperator pauli_dot(const UnitVector3& n) { return bloch_operator(n.vec()); }

std::pair<QubitState, QubitState> spin_eigenstates(const UnitVector3& n) {
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double rho = std::hypot(n.x(), n.y());
  const double phi = rho > 0.0 ? std::atan2(n.y(), n.x()) : 0.0;
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {QubitState(c, std::polar(s, phi)),
          QubitState(-std::polar(s, -phi), c)};
}

Eigen::Vector4cd kron(const Eigen::Vector2cd& u, const Eigen::Vector2cd& v) {
  return {u(0) * v(0), u(0) * v(1), u(1) * v(0), u(1) * v(1)};
}

TwoQubitOperator kron(const QubitOperator& a, const QubitOperator& b) {
  TwoQubitOperator out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

TwoQubitState tensor(const QubitState& s1, const QubitState& s2) {
  return TwoQubitState(kron(s1.amplitudes(), s2.amplitudes()));
}

QubitOperator partial_trace_unchecked(const TwoQubitOperator& rho,
                                      Subsystem keep) {
  QubitOperator out;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      if (keep == Subsystem::kFirst) {
        out(i, k) = rho(2 * i, 2 * k) + rho(2 * i + 1, 2 * k + 1);
      } else {
        out(i, k) = rho(i, k) + rho(2 + i, 2 + k);
      }
    }
  }
  return out;
}

QubitOperator partial_trace(const TwoQubitOperator& rho, Subsystem keep) {
  if (!is_density(rho)) {
    throw ValidationError("partial_trace: input is not a density operator");
  }
  return partial_trace_unchecked(rho, keep);
}

QubitOperator reduced_density(const Eigen::Vector4cd& amps, Subsystem keep) {
  QubitOperator out;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      if (keep == Subsystem::kFirst) {
        out(i, k) = amps(2 * i) * std::conj(amps(2 * k)) +
                    amps(2 * i + 1) * std::conj(amps(2 * k + 1));
      } else {
        out(i, k) = amps(i) * std::conj(amps(k)) +
                    amps(2 + i) * std::conj(amps(2 + k));
      }
    }
  }
  return out;
}

Vector3 bloch_from_density(const QubitOperator& rho) {
  // Tr(ρσ_x) = 2 Re ρ₁₀, Tr(ρσ_y) = 2 Im ρ₁₀, Tr(ρσ_z) = ρ₀₀ − ρ₁₁.
  return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

QubitOperator density_from_bloch(const Vector3& c) {
  const double n = c.norm();
  if (!std::isfinite(n) || n > 1.0 + kTolerance) {
    throw ValidationError(describe("density_from_bloch: |c| must be <= 1", n));
  }
  return 0.5 * (identity2() + bloch_operator(c));
}

bool is_hermitian(const QubitOperator& m, double tol) {
  return hermitian_impl(m, tol);
}

bool is_hermitian(const TwoQubitOperator& m, double tol) {
  return hermitian_impl(m, tol);
}

double min_eigenvalue(const QubitOperator& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return mean - half_gap;
}

bool is_density(const QubitOperator& m, double tol) {
  return is_hermitian(m, tol) && std::abs(m.trace() - 1.0) <= tol &&
         min_eigenvalue(m) >= -tol;
}

bool is_density(const TwoQubitOperator& m, double tol) {
  if (!is_hermitian(m, tol) || std::abs(m.trace() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<TwoQubitOperator> solver(
      m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

double unitarity_residual(const TwoQubitOperator& u) {
  return max_abs_diff(u.adjoint() * u, TwoQubitOperator::Identity());
}

}  // namespace spinclone
