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

#include "spinclone/stats.hpp"

#include <limits>
#include <numbers>
#include <stdexcept>

namespace spinclone {

double chi_square_survival(double x, int dof) {
  if (dof < 1) throw std::invalid_argument("chi_square_survival: dof < 1");
  if (!(x > 0.0)) return 1.0;
  if (std::isinf(x)) return 0.0;
  const double half = 0.5 * x;
  // Q(k+2) = Q(k) + (x/2)^{k/2} e^{−x/2} / Γ(k/2 + 1), seeded with the
  // closed forms for k = 1 and k = 2.
  double q;
  double term;
  int k;
  if (dof % 2 == 1) {
    q = std::erfc(std::sqrt(half));
    term = std::sqrt(half) * std::exp(-half) / std::tgamma(1.5);
    k = 1;
  } else {
    q = std::exp(-half);
    term = half * std::exp(-half);
    k = 2;
  }
  while (k < dof) {
    q += term;
    k += 2;
    term *= half / (0.5 * k);
  }
  return q;
}

ChiSquare chi_square_test(std::span<const std::uint64_t> counts,
                          std::span<const double> probabilities) {
  if (counts.size() != probabilities.size()) {
    throw std::invalid_argument("chi_square_test: size mismatch");
  }
  double n = 0.0;
  for (auto c : counts) n += static_cast<double>(c);

  ChiSquare result;
  int categories = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = n * probabilities[i];
    const double observed = static_cast<double>(counts[i]);
    if (probabilities[i] <= 0.0) {
      if (observed > 0.0) {
        result.statistic = std::numeric_limits<double>::infinity();
      }
      continue;
    }
    ++categories;
    result.statistic += (observed - expected) * (observed - expected) / expected;
  }
  result.dof = categories - 1;
  result.p_value =
      result.dof >= 1 ? chi_square_survival(result.statistic, result.dof)
                      : (std::isinf(result.statistic) ? 0.0 : 1.0);
  return result;
}

}  // namespace spinclone
