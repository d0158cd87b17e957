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

#include "spinclone/fidelity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinclone {

double global_fidelity(const QubitState& psi, const TwoQubitState& joint) {
  const Eigen::Vector4cd copies = kron(psi.amplitudes(), psi.amplitudes());
  return std::norm(copies.dot(joint.amplitudes()));
}

double mixed_fidelity(const QubitState& psi, const TwoQubitOperator& rho12) {
  const Eigen::Vector4cd copies = kron(psi.amplitudes(), psi.amplitudes());
  return copies.dot(rho12 * copies).real();
}

double state_fidelity(const QubitState& psi, const QubitOperator& rho) {
  return psi.amplitudes().dot(rho * psi.amplitudes()).real();
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw ValidationError("gauss_legendre: n must be >= 1");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration on P_n from the Tricomi initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

SphereQuadrature::SphereQuadrature(QuadratureRule rule) : rule_(rule) {
  if (rule.polar_nodes < 1 || rule.azimuthal_nodes < 1) {
    throw ValidationError("SphereQuadrature: node counts must be >= 1");
  }
  const GaussLegendre gl = gauss_legendre(rule.polar_nodes);
  const int na = rule.azimuthal_nodes;
  nodes_.reserve(static_cast<std::size_t>(rule.polar_nodes) * na);
  for (int i = 0; i < rule.polar_nodes; ++i) {
    const double u = gl.nodes[i];  // cos θ
    const double c = std::sqrt(0.5 * (1.0 + u));
    const double s = std::sqrt(0.5 * (1.0 - u));
    const double w = 0.5 * gl.weights[i] / na;
    for (int k = 0; k < na; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / na;
      nodes_.push_back({QubitState(c, std::polar(s, phi)), w});
    }
  }
}

double f_av_closed(const MeasurementGeometry& g) {
  const double a = g.alpha(), b = g.beta(), eta = g.eta();
  const double ra = std::sqrt(std::max(0.0, 1.0 - a * a));
  const double rb = std::sqrt(std::max(0.0, 1.0 - b * b));
  const double c = std::cos(eta), s = std::sin(eta);
  const double bracket = a * rb + b * rb * c + b * ra * s;
  return 0.25 + a / 12 + b / 12 + a * b * c * c / 12 + rb / 12 + ra * s / 12 +
         bracket / (24.0 * g.p());
}

SingleCloneFidelities f_single_closed(const MeasurementGeometry& g) {
  const double a = g.alpha(), b = g.beta(), eta = g.eta();
  const double ra = std::sqrt(std::max(0.0, 1.0 - a * a));
  const double rb = std::sqrt(std::max(0.0, 1.0 - b * b));
  const double bracket =
      a * rb + b * std::cos(eta) * rb + b * std::sin(eta) * ra;
  return {0.5 + a / 6 + rb / 6 + bracket / (12.0 * g.p()), 0.5 + b / 6};
}

SingleCloneFidelities f_mixed_closed(const MeasurementGeometry& g) {
  return {0.5 + g.alpha() / 6, 0.5 + g.beta() / 6};
}

UniversalBaseline universal_baseline() {
  constexpr double single = 5.0 / 6.0;
  return {single * single, 2.0 / 3.0, 2.0 / 3.0};
}

std::array<double, 6> pointwise_fidelities(const Cloner& cloner,
                                           const QubitState& psi) {
  const Eigen::Vector2cd& v = psi.amplitudes();
  const Eigen::Vector4cd c = cloner.output(v);
  const Eigen::Vector4cd copies = kron(v, v);

  const double f = std::norm(copies.dot(c));
  const double fa =
      v.dot(reduced_density(c, Subsystem::kFirst) * v).real();
  const double fb =
      v.dot(reduced_density(c, Subsystem::kSecond) * v).real();

  // Measure-and-prepare leaves |a_i b_j⟩ with the cloner's weights.
  std::array<double, 2> overlap_a{}, overlap_b{};
  for (int i = 0; i < 2; ++i) {
    overlap_a[i] = std::norm(v.dot(cloner.a_states()[i]));
    overlap_b[i] = std::norm(v.dot(cloner.b_states()[i]));
  }
  double fm = 0.0, fma = 0.0, fmb = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double weight = std::norm(cloner.product_states()[k].dot(c));
    const int i = k / 2, j = k % 2;
    fm += weight * overlap_a[i] * overlap_b[j];
    fma += weight * overlap_a[i];
    fmb += weight * overlap_b[j];
  }
  return {f, fa, fb, fm, fma, fmb};
}

FidelityReport fidelity_report(const MeasurementGeometry& g,
                               const SphereQuadrature& quadrature) {
  const Cloner cloner(g);
  const auto avg = quadrature.average_many<6>(
      [&](const QubitState& psi) { return pointwise_fidelities(cloner, psi); });

  FidelityReport r;
  r.alpha = g.alpha();
  r.beta = g.beta();
  r.eta = g.eta();
  r.p = g.p();
  r.epsilon = g.epsilon();

  r.f_av_quad = avg[0];
  r.f_a_quad = avg[1];
  r.f_b_quad = avg[2];
  r.f_m_quad = avg[3];
  r.f_ma_quad = avg[4];
  r.f_mb_quad = avg[5];

  r.f_av_closed = f_av_closed(g);
  const SingleCloneFidelities single = f_single_closed(g);
  r.f_a_closed = single.a;
  r.f_b_closed = single.b;
  const SingleCloneFidelities mixed = f_mixed_closed(g);
  r.f_ma_closed = mixed.a;
  r.f_mb_closed = mixed.b;

  const auto flag = [&](const char* name, double closed, double quad) {
    if (!std::isfinite(closed) || std::abs(closed - quad) > kDiscrepancyTolerance) {
      r.discrepancies.emplace_back(name);
    }
  };
  flag("f_av", r.f_av_closed, r.f_av_quad);
  flag("f_a", r.f_a_closed, r.f_a_quad);
  flag("f_b", r.f_b_closed, r.f_b_quad);
  flag("f_ma", r.f_ma_closed, r.f_ma_quad);
  flag("f_mb", r.f_mb_closed, r.f_mb_quad);
  return r;
}

}  // namespace spinclone
