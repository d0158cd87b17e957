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

namespace spinclone {
namespace {

using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

// Eigenvectors of the auxiliary axes m and l, parametrised by their in-plane
// angle t in the canonical frame:
//   |+⟩ = (cos t/2, sin t/2),  |−⟩ = (sin t/2, −cos t/2).
// The lower state carries the opposite sign to spin_eigenstates; with this
// choice the dilation basis is orthonormal for ε ∈ [0, π/2] and the cloner
// signs put the transverse Bloch component of clone 1 along +n.
std::pair<Vec2, Vec2> in_plane_eigenvectors(double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  return {Vec2(c, s), Vec2(s, -c)};
}

struct CanonicalStates {
  Vec2 a_plus, a_minus, b_plus, b_minus;
};

CanonicalStates canonical_states(const MeasurementGeometry& g) {
  const auto [ap, am] = spin_eigenstates(UnitVector3(0, 0, 1));
  const auto [bp, bm] = spin_eigenstates(
      UnitVector3(std::sin(g.eta()), 0, std::cos(g.eta())));
  return {ap.amplitudes(), am.amplitudes(), bp.amplitudes(), bm.amplitudes()};
}

Vec4 to_caller_frame(const MeasurementGeometry& g, const Vec4& v) {
  const QubitOperator inv = g.frame().su2.adjoint();
  return kron(inv, inv) * v;
}

constexpr std::array<double, 4> kOutputSigns = {+1.0, +1.0, -1.0, -1.0};

}  // namespace

double orthonormality_residual(const NaimarkBasis& basis) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex overlap = basis.vectors[i].amplitudes().dot(
          basis.vectors[j].amplitudes());
      worst = std::max(worst, std::abs(overlap - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

NaimarkBasis naimark_basis_unchecked(const MeasurementGeometry& g,
                                     const DilationSigns& signs) {
  const CanonicalStates s = canonical_states(g);
  const auto [m_plus, m_minus] = in_plane_eigenvectors(g.m_angle());
  const auto [l_plus, l_minus] = in_plane_eigenvectors(g.l_angle());
  const double sp = std::sqrt(g.p());
  const double sq = std::sqrt(1.0 - g.p());
  const double ce = std::cos(g.epsilon());
  const double se = std::sin(g.epsilon());
  const auto& t = signs.tail;

  const Vec4 pp = sp * kron(m_plus, s.b_plus) +
                  t[0] * sq * kron(s.a_plus, s.b_minus);
  const Vec4 pm = sq * kron(l_plus, s.b_plus) +
                  t[1] * sp * kron(Vec2(ce * s.a_plus + se * s.a_minus), s.b_minus);
  const Vec4 mp = sq * kron(l_minus, s.b_plus) +
                  t[2] * sp * kron(Vec2(se * s.a_plus - ce * s.a_minus), s.b_minus);
  const Vec4 mm = sp * kron(m_minus, s.b_plus) +
                  t[3] * sq * kron(s.a_minus, s.b_minus);

  return NaimarkBasis{{TwoQubitState(to_caller_frame(g, pp)),
                       TwoQubitState(to_caller_frame(g, pm)),
                       TwoQubitState(to_caller_frame(g, mp)),
                       TwoQubitState(to_caller_frame(g, mm))}};
}

NaimarkBasis naimark_basis(const MeasurementGeometry& g) {
  NaimarkBasis basis = naimark_basis_unchecked(g);
  const double residual = orthonormality_residual(basis);
  if (!(residual <= kTolerance)) throw OrthonormalityError(residual);
  return basis;
}

std::array<TwoQubitState, 4> product_basis(const MeasurementGeometry& g) {
  const CanonicalStates s = canonical_states(g);
  return {TwoQubitState(to_caller_frame(g, kron(s.a_plus, s.b_plus))),
          TwoQubitState(to_caller_frame(g, kron(s.a_plus, s.b_minus))),
          TwoQubitState(to_caller_frame(g, kron(s.a_minus, s.b_plus))),
          TwoQubitState(to_caller_frame(g, kron(s.a_minus, s.b_minus)))};
}

QubitState blank_state(const MeasurementGeometry& g) {
  return QubitState(g.frame().from_canonical(canonical_states(g).b_plus));
}

TwoQubitOperator clone_unitary(const MeasurementGeometry& g) {
  return clone_unitary(g, naimark_basis(g));
}

TwoQubitOperator clone_unitary(const MeasurementGeometry& g,
                               const NaimarkBasis& basis) {
  const auto products = product_basis(g);
  TwoQubitOperator u = TwoQubitOperator::Zero();
  for (int k = 0; k < 4; ++k) {
    u += kOutputSigns[k] * products[k].amplitudes() *
         basis.vectors[k].amplitudes().adjoint();
  }
  return u;
}

Cloner::Cloner(const MeasurementGeometry& g)
    : unitary_(clone_unitary(g)), blank_(blank_state(g).amplitudes()) {
  const auto products = product_basis(g);
  for (int k = 0; k < 4; ++k) products_[k] = products[k].amplitudes();
  const CanonicalStates s = canonical_states(g);
  const CanonicalFrame& f = g.frame();
  a_states_ = {f.from_canonical(s.a_plus), f.from_canonical(s.a_minus)};
  b_states_ = {f.from_canonical(s.b_plus), f.from_canonical(s.b_minus)};
}

CloneOutput Cloner::clone(const QubitState& psi) const {
  const Vec4 c = output(psi.amplitudes());
  CloneOutput out;
  out.joint_state.emplace(c);
  out.joint = c * c.adjoint();
  for (int k = 0; k < 4; ++k) {
    out.amplitudes[k] = products_[k].dot(c);
    out.statistics.probabilities[k] = std::norm(out.amplitudes[k]);
  }
  out.rho_a = reduced_density(c, Subsystem::kFirst);
  out.rho_b = reduced_density(c, Subsystem::kSecond);
  out.bloch_a = bloch_from_density(out.rho_a);
  out.bloch_b = bloch_from_density(out.rho_b);
  return out;
}

CloneOutput Cloner::clone(const QubitOperator& rho) const {
  if (!is_density(rho)) {
    throw ValidationError("clone_mixed: rho is not a density operator");
  }
  CloneOutput out;
  out.joint = unitary_ * kron(rho, QubitOperator(blank_ * blank_.adjoint())) *
              unitary_.adjoint();
  for (int k = 0; k < 4; ++k) {
    out.statistics.probabilities[k] =
        products_[k].dot(out.joint * products_[k]).real();
  }
  out.rho_a = partial_trace_unchecked(out.joint, Subsystem::kFirst);
  out.rho_b = partial_trace_unchecked(out.joint, Subsystem::kSecond);
  out.bloch_a = bloch_from_density(out.rho_a);
  out.bloch_b = bloch_from_density(out.rho_b);
  return out;
}

CloneOutput clone_pure(const MeasurementGeometry& g, const QubitState& psi) {
  return Cloner(g).clone(psi);
}

CloneOutput clone_mixed(const MeasurementGeometry& g,
                        const QubitOperator& rho) {
  return Cloner(g).clone(rho);
}

TwoQubitOperator measure_and_prepare(const MeasurementGeometry& g,
                                     const QubitState& psi) {
  const JointDistribution dist =
      joint_distribution(psi.density(), build_povm(g));
  const auto products = product_basis(g);
  TwoQubitOperator rho = TwoQubitOperator::Zero();
  for (int k = 0; k < 4; ++k) {
    rho += dist.probabilities[k] * products[k].density();
  }
  return rho;
}

}  // namespace spinclone
