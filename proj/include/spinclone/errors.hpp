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

#include <stdexcept>
#include <string>

namespace spinclone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition (non-unit vector, non-density
/// operator, out-of-range sharpness, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The sharpness pair does not sit on the optimal frontier
/// |αa+βb| + |αa−βb| = 2. `residual()` is the signed excess over 2.
class NonSaturatingError : public Error {
 public:
  explicit NonSaturatingError(double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Both derived measurement axes are undefined.
class DegenerateAxisError : public Error {
 public:
  using Error::Error;
};

/// The constructed dilation basis is not orthonormal. This indicates a phase
/// convention bug, not bad user input.
class OrthonormalityError : public Error {
 public:
  explicit OrthonormalityError(double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace spinclone
