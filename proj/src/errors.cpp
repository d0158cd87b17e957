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

#include "spinclone/errors.hpp"

#include <cstdio>

namespace spinclone {
namespace {

std::string format_residual(const char* what, double residual) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s%.17g", what, residual);
  return buf;
}

}  // namespace

NonSaturatingError::NonSaturatingError(double residual)
    : Error(format_residual(
          "NonSaturating: |alpha*a + beta*b| + |alpha*a - beta*b| - 2 = ",
          residual)),
      residual_(residual) {}

OrthonormalityError::OrthonormalityError(double residual)
    : Error(format_residual(
          "OrthonormalityFailure: max |<phi_i|phi_j> - delta_ij| = ",
          residual)),
      residual_(residual) {}

}  // namespace spinclone
