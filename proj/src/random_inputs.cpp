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

#include "spinclone/random_inputs.hpp"

#include <cmath>
#include <numbers>

namespace spinclone {

QubitState haar_random_state(Rng& rng) {
  Eigen::Vector2cd v;
  do {
    const double re0 = rng.normal(), im0 = rng.normal();
    const double re1 = rng.normal(), im1 = rng.normal();
    v << Complex(re0, im0), Complex(re1, im1);
  } while (v.squaredNorm() == 0.0);
  return QubitState(v / v.norm());
}

UnitVector3 random_unit_vector(Rng& rng) {
  Vector3 v;
  do {
    v << rng.normal(), rng.normal(), rng.normal();
  } while (v.squaredNorm() == 0.0);
  return UnitVector3::normalized(v);
}

QubitOperator random_density(Rng& rng) {
  const double radius = std::cbrt(rng.uniform());
  return density_from_bloch(radius * random_unit_vector(rng).vec());
}

UnitVector3 vector_at_angle(const UnitVector3& a, double eta, double twist) {
  // Any unit vector orthogonal to a, turned by `twist` about a.
  const Vector3 helper =
      std::abs(a.x()) < 0.9 ? Vector3::UnitX() : Vector3::UnitY();
  const Vector3 e1 = a.vec().cross(helper).normalized();
  const Vector3 e2 = a.vec().cross(e1);
  const Vector3 e = std::cos(twist) * e1 + std::sin(twist) * e2;
  return UnitVector3::normalized(std::cos(eta) * a.vec() + std::sin(eta) * e);
}

MeasurementGeometry random_optimal_geometry(Rng& rng) {
  const double alpha = rng.uniform();
  const double eta = std::numbers::pi * rng.uniform();
  const UnitVector3 a = random_unit_vector(rng);
  const UnitVector3 b =
      vector_at_angle(a, eta, 2.0 * std::numbers::pi * rng.uniform());
  return build_geometry(a, b, alpha, beta_max(alpha, eta));
}

}  // namespace spinclone
