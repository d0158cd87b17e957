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

// Random inputs for property checks and Monte Carlo estimates.

#pragma once

#include "spinclone/linalg.hpp"
#include "spinclone/measurement.hpp"
#include "spinclone/rng.hpp"

namespace spinclone {

/// Haar-random pure state: two standard normals per complex amplitude, then
/// normalise.
QubitState haar_random_state(Rng& rng);

/// Uniform on the unit sphere.
UnitVector3 random_unit_vector(Rng& rng);

/// Density operator with a uniformly random Bloch vector inside the ball.
QubitOperator random_density(Rng& rng);

/// Uniform α ∈ [0, 1], η ∈ [0, π], β = beta_max(α, η), with a and b placed
/// in a uniformly random orientation.
MeasurementGeometry random_optimal_geometry(Rng& rng);

/// Unit b at angle eta from a, rotated about a by `twist`.
UnitVector3 vector_at_angle(const UnitVector3& a, double eta, double twist);

}  // namespace spinclone
