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

#include "nhqm/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace nhqm {

HamiltonianSchedule HamiltonianSchedule::constant(Matrix h, double tau) {
  if (!is_square(h) || !all_finite(h))
    throw InvalidConfig("schedule: constant matrix must be square and finite");
  if (tau <= 0.0) throw InvalidConfig("schedule: tau must be positive");
  HamiltonianSchedule s;
  s.dim_ = static_cast<int>(h.rows());
  s.tau_ = tau;
  s.fn_ = [h = std::move(h)](double) { return h; };
  return s;
}

HamiltonianSchedule HamiltonianSchedule::from_function(
    int dim, double tau, std::function<Matrix(double)> fn) {
  if (dim <= 0) throw InvalidConfig("schedule: dim must be positive");
  if (tau <= 0.0) throw InvalidConfig("schedule: tau must be positive");
  HamiltonianSchedule s;
  s.dim_ = dim;
  s.tau_ = tau;
  s.fn_ = std::move(fn);
  Matrix probe = s.fn_(0.0);
  if (probe.rows() != dim || probe.cols() != dim)
    throw InvalidConfig("schedule: callable returns wrong dimension");
  return s;
}

HamiltonianSchedule HamiltonianSchedule::from_grid(
    std::vector<double> times, std::vector<Matrix> samples) {
  if (times.size() != samples.size() || times.size() < 2)
    throw InvalidConfig("schedule: need matching times/samples, at least 2");
  if (times.front() != 0.0)
    throw InvalidConfig("schedule: grid must start at t=0");
  for (size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1]))
      throw InvalidConfig("schedule: grid times must be strictly increasing");
  const int d = static_cast<int>(samples.front().rows());
  for (const Matrix& m : samples)
    if (m.rows() != d || m.cols() != d || !all_finite(m))
      throw InvalidConfig("schedule: grid samples must be square, finite, same dim");

  HamiltonianSchedule s;
  s.dim_ = d;
  s.tau_ = times.back();
  s.fn_ = [times = std::move(times), samples = std::move(samples)](double t) {
    if (t <= times.front()) return samples.front();
    if (t >= times.back()) return samples.back();
    auto it = std::upper_bound(times.begin(), times.end(), t);
    size_t hi = static_cast<size_t>(it - times.begin());
    size_t lo = hi - 1;
    double w = (t - times[lo]) / (times[hi] - times[lo]);
    return Matrix((1.0 - w) * samples[lo] + w * samples[hi]);
  };
  return s;
}

double HamiltonianSchedule::max_norm_estimate(int scan_points) const {
  double best = 0.0;
  for (int k = 0; k < scan_points; ++k) {
    double t = tau_ * k / (scan_points - 1);
    best = std::max(best, fn_(t).norm());
  }
  return best;
}

int HamiltonianSchedule::default_steps(int min_steps) const {
  double hmax = max_norm_estimate();
  if (hmax <= 0.0) return min_steps;
  return std::max(min_steps, static_cast<int>(std::ceil(tau_ * hmax / 0.05)));
}

}  // namespace nhqm
