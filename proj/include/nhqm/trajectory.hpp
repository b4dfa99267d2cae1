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

#include <vector>

#include "nhqm/types.hpp"

namespace nhqm {

/// Values sampled on the uniform grid t_k = k * tau / N, k = 0..N.
template <class T>
struct Trajectory {
  std::vector<double> times;
  std::vector<T> values;

  size_t size() const { return times.size(); }
  double step() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  double tau() const { return times.empty() ? 0.0 : times.back(); }

  const T& front() const { return values.front(); }
  const T& back() const { return values.back(); }
  const T& at(size_t k) const { return values[k]; }
};

using StateTrajectory = Trajectory<Vector>;
using MatrixTrajectory = Trajectory<Matrix>;

inline std::vector<double> uniform_grid(double tau, int steps) {
  std::vector<double> t(static_cast<size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) t[static_cast<size_t>(k)] = tau * k / steps;
  return t;
}

}  // namespace nhqm
