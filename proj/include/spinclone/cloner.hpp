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

// Cloning machine that realises the optimal joint measurement.
//
// The input qubit is paired with a blank prepared in |b+⟩. A dilation basis
// {|φ_ij⟩} of the two-qubit space reproduces the joint measurement as a
// projective one, |⟨φ_ij|ψ, b+⟩|² = ⟨ψ|Π_ij|ψ⟩, and the cloning unitary maps
//   |φ_{++}⟩ → |a+, b+⟩,  |φ_{+−}⟩ → |a+, b−⟩,
//   |φ_{−+}⟩ → −|a−, b+⟩, |φ_{−−}⟩ → −|a−, b−⟩.
// Measuring a·σ on clone 1 and b·σ on clone 2 then yields the joint
// statistics.
//
// All states are expressed in the caller's frame. Internally everything is
// built in the canonical frame of MeasurementGeometry and rotated back.

#pragma once

#include <array>
#include <optional>

#include "spinclone/linalg.hpp"
#include "spinclone/measurement.hpp"

namespace spinclone {

/// Signs in front of the second term of each dilation vector, in outcome
/// order. The defaults define the basis; anything else is only useful for
/// negative-control fixtures.
struct DilationSigns {
  std::array<double, 4> tail = {+1.0, -1.0, +1.0, +1.0};
};

struct NaimarkBasis {
  std::array<TwoQubitState, 4> vectors;

  const TwoQubitState& operator[](Outcome o) const {
    return vectors[index(o)];
  }
};

/// Max-abs entry of the Gram matrix minus the identity.
double orthonormality_residual(const NaimarkBasis& basis);

/// Builds the dilation basis with the given term signs, without checking it.
NaimarkBasis naimark_basis_unchecked(const MeasurementGeometry& g,
                                     const DilationSigns& signs = {});

/// The dilation basis
///   |φ_{++}⟩ = √p |m+⟩|b+⟩ + √(1−p) |a+⟩|b−⟩
///   |φ_{−−}⟩ = √p |m−⟩|b+⟩ + √(1−p) |a−⟩|b−⟩
///   |φ_{+−}⟩ = √(1−p) |l+⟩|b+⟩ − √p (cos ε |a+⟩ + sin ε |a−⟩)|b−⟩
///   |φ_{−+}⟩ = √(1−p) |l−⟩|b+⟩ + √p (sin ε |a+⟩ − cos ε |a−⟩)|b−⟩
/// Throws OrthonormalityError if the result misses kTolerance.
NaimarkBasis naimark_basis(const MeasurementGeometry& g);

/// Product states |a_i⟩|b_j⟩ in outcome order.
std::array<TwoQubitState, 4> product_basis(const MeasurementGeometry& g);

/// The blank state |b+⟩ fed to the second port.
QubitState blank_state(const MeasurementGeometry& g);

TwoQubitOperator clone_unitary(const MeasurementGeometry& g);

/// Σ s_ij |a_i b_j⟩⟨φ_ij| for a caller-supplied dilation basis, with
/// s = (+, +, −, −) in outcome order.
TwoQubitOperator clone_unitary(const MeasurementGeometry& g,
                               const NaimarkBasis& basis);

struct CloneOutput {
  TwoQubitOperator joint;
  /// Set for pure inputs.
  std::optional<TwoQubitState> joint_state;
  /// Coefficients λ of the output in the |a_i⟩|b_j⟩ basis (pure inputs).
  std::array<Complex, 4> amplitudes{};
  /// Weights of the output on the |a_i⟩|b_j⟩ basis.
  JointDistribution statistics;
  QubitOperator rho_a;
  QubitOperator rho_b;
  Vector3 bloch_a;
  Vector3 bloch_b;
};

/// Precomputed unitary and bases for repeated cloning in one geometry.
class Cloner {
 public:
  explicit Cloner(const MeasurementGeometry& g);

  const TwoQubitOperator& unitary() const noexcept { return unitary_; }
  const std::array<Eigen::Vector4cd, 4>& product_states() const noexcept {
    return products_;
  }
  const Eigen::Vector2cd& blank() const noexcept { return blank_; }
  /// (|a+⟩, |a−⟩) and (|b+⟩, |b−⟩) in the caller's frame.
  const std::array<Eigen::Vector2cd, 2>& a_states() const noexcept {
    return a_states_;
  }
  const std::array<Eigen::Vector2cd, 2>& b_states() const noexcept {
    return b_states_;
  }

  /// U(|ψ⟩ ⊗ |b+⟩) as raw amplitudes.
  Eigen::Vector4cd output(const Eigen::Vector2cd& psi) const {
    return unitary_ * kron(psi, blank_);
  }

  CloneOutput clone(const QubitState& psi) const;
  CloneOutput clone(const QubitOperator& rho) const;

 private:
  TwoQubitOperator unitary_;
  std::array<Eigen::Vector4cd, 4> products_;
  Eigen::Vector2cd blank_;
  std::array<Eigen::Vector2cd, 2> a_states_;
  std::array<Eigen::Vector2cd, 2> b_states_;
};

/// U|ψ⟩|b+⟩ with reduced states and Bloch vectors.
CloneOutput clone_pure(const MeasurementGeometry& g, const QubitState& psi);

/// U(ρ ⊗ |b+⟩⟨b+|)U†. Throws ValidationError for a non-density rho.
CloneOutput clone_mixed(const MeasurementGeometry& g, const QubitOperator& rho);

/// Perform the joint measurement and prepare |a_i⟩|b_j⟩ for outcome (i, j):
/// Σ P_ij |a_i b_j⟩⟨a_i b_j|.
TwoQubitOperator measure_and_prepare(const MeasurementGeometry& g,
                                     const QubitState& psi);

}  // namespace spinclone
