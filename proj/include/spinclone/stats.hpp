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

#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace spinclone {

/// Neumaier-compensated running sum. The result depends only on the order
/// values are added, never on their magnitudes' cancellation pattern.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Survival function of the χ² distribution with `dof` degrees of freedom.
double chi_square_survival(double x, int dof);

/// Pearson goodness-of-fit of `counts` against `probabilities`. Categories
/// with zero expected probability are dropped; an observation in one makes the
/// statistic infinite.
ChiSquare chi_square_test(std::span<const std::uint64_t> counts,
                          std::span<const double> probabilities);

}  // namespace spinclone
