// Copyright 2026 nhqm developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nhqm/errors.hpp"
#include "nhqm/types.hpp"

namespace nhqm {

/// Time-dependent generator H(t) on [0, tau], either a closed-form callable
/// or grid samples with linear interpolation in t.
class HamiltonianSchedule {
 public:
  HamiltonianSchedule() = default;

  static HamiltonianSchedule constant(Matrix h, double tau);
  static HamiltonianSchedule from_function(
      int dim, double tau, std::function<Matrix(double)> fn);
  /// Grid samples; times must be strictly increasing and cover 0 and tau.
  static HamiltonianSchedule from_grid(std::vector<double> times,
                                       std::vector<Matrix> samples);

  int dim() const { return dim_; }
  double tau() const { return tau_; }

  Matrix operator()(double t) const { return fn_(t); }

  /// Coarse scan of max ||H(t)|| (spectral-norm upper bound via Frobenius).
  double max_norm_estimate(int scan_points = 33) const;

  /// Step count giving h * max||H|| <= 0.05, at least min_steps.
  int default_steps(int min_steps = 16) const;

 private:
  int dim_ = 0;
  double tau_ = 0.0;
  std::function<Matrix(double)> fn_;
};

}  // namespace nhqm
