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

// Cloning fidelities: pointwise, averaged over the Bloch sphere by quadrature
// or Monte Carlo, and the closed forms they are checked against.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spinclone/cloner.hpp"
#include "spinclone/linalg.hpp"
#include "spinclone/measurement.hpp"
#include "spinclone/random_inputs.hpp"
#include "spinclone/rng.hpp"
#include "spinclone/stats.hpp"

namespace spinclone {

/// Closed forms further than this from quadrature are flagged.
inline constexpr double kDiscrepancyTolerance = 1e-6;

/// |⟨ψ|⟨ψ|c⟩|².
double global_fidelity(const QubitState& psi, const TwoQubitState& joint);
/// ⟨ψ|⟨ψ|ρ₁₂|ψ⟩|ψ⟩.
double mixed_fidelity(const QubitState& psi, const TwoQubitOperator& rho12);
/// ⟨ψ|ρ|ψ⟩.
double state_fidelity(const QubitState& psi, const QubitOperator& rho);

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule on [−1, 1], nodes ascending.
GaussLegendre gauss_legendre(int n);

/// Product rule on the sphere: Gauss–Legendre in cos θ times the periodic
/// trapezoid rule in φ. Exact for spherical polynomials of degree
/// < min(2·polar_nodes, azimuthal_nodes).
struct QuadratureRule {
  int polar_nodes = 64;
  int azimuthal_nodes = 128;
};

class SphereQuadrature {
 public:
  struct Node {
    QubitState state;
    double weight;  // weights sum to 1
  };

  explicit SphereQuadrature(QuadratureRule rule = {});

  const QuadratureRule& rule() const noexcept { return rule_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  /// Uniform average of f over pure states.
  template <typename F>
  double average(F&& f) const {
    CompensatedSum total;
    for (const Node& node : nodes_) total.add(node.weight * f(node.state));
    return total.value();
  }

  /// Averages N quantities from one evaluation per node; f returns
  /// std::array<double, N>.
  template <std::size_t N, typename F>
  std::array<double, N> average_many(F&& f) const {
    std::array<CompensatedSum, N> totals;
    for (const Node& node : nodes_) {
      const std::array<double, N> values = f(node.state);
      for (std::size_t i = 0; i < N; ++i) totals[i].add(node.weight * values[i]);
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = totals[i].value();
    return out;
  }

 private:
  QuadratureRule rule_;
  std::vector<Node> nodes_;
};

template <typename F>
double sphere_average(F&& f, QuadratureRule rule = {}) {
  return SphereQuadrature(rule).average(std::forward<F>(f));
}

/// Plain Monte Carlo estimate of the uniform average of f.
template <typename F>
double monte_carlo_average(F&& f, std::size_t samples,
                           std::uint64_t seed = kDefaultSeed) {
  Rng rng(seed);
  CompensatedSum total;
  for (std::size_t i = 0; i < samples; ++i) total.add(f(haar_random_state(rng)));
  return total.value() / static_cast<double>(samples);
}

/// Averaged two-clone fidelity:
///   ¼ + α/12 + β/12 + (αβ/12)cos²η + √(1−β²)/12 + (√(1−α²)/12) sin η
///   + (1/24p)[α√(1−β²) + β√(1−β²) cos η + β√(1−α²) sin η].
/// NaN when p = 0.
double f_av_closed(const MeasurementGeometry& g);

struct SingleCloneFidelities {
  double a = 0.0;
  double b = 0.0;
};

/// F_a = ½ + α/6 + √(1−β²)/6
///       + (1/12p)(α√(1−β²) + β cos η √(1−β²) + β sin η √(1−α²)),
/// F_b = ½ + β/6.
SingleCloneFidelities f_single_closed(const MeasurementGeometry& g);

/// Reduced-state fidelities of measure-and-prepare: (½ + α/6, ½ + β/6).
SingleCloneFidelities f_mixed_closed(const MeasurementGeometry& g);

/// Symmetric universal cloner: each clone has fidelity 5/6 and the Bloch
/// vector shrunk by 2/3.
struct UniversalBaseline {
  double two_particle_fidelity = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

UniversalBaseline universal_baseline();

struct FidelityReport {
  double alpha = 0, beta = 0, eta = 0, p = 0, epsilon = 0;

  double f_av_quad = 0, f_av_closed = 0;
  double f_a_quad = 0, f_a_closed = 0;
  double f_b_quad = 0, f_b_closed = 0;
  double f_m_quad = 0;
  double f_ma_quad = 0, f_ma_closed = 0;
  double f_mb_quad = 0, f_mb_closed = 0;

  /// Names of closed forms that disagree with quadrature by more than
  /// kDiscrepancyTolerance (or are not finite): "f_av", "f_a", "f_b",
  /// "f_ma", "f_mb".
  std::vector<std::string> discrepancies;
};

/// Pointwise fidelities of the cloner and of measure-and-prepare for one
/// input state: {F, F_a, F_b, F_m, F_ma, F_mb}.
std::array<double, 6> pointwise_fidelities(const Cloner& cloner,
                                           const QubitState& psi);

/// Every averaged fidelity for one geometry, quadrature next to closed form.
FidelityReport fidelity_report(const MeasurementGeometry& g,
                               const SphereQuadrature& quadrature);

}  // namespace spinclone
