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

#include "nhqm/dynamics.hpp"
#include "nhqm/linalg.hpp"

namespace nhqm {

/// eta(t) sampled on the grid together with the cached metric W = eta^dag eta.
/// A scalar factor applied to eta (ensure_dilation_ready) rescales W by c^2
/// and leaves all physical predictions invariant.
struct MetricTrajectory {
  MatrixTrajectory eta;
  std::vector<Matrix> w;  // W(t_k), positive-definite at every grid point
  double scale = 1.0;     // cumulative factor applied to eta

  size_t size() const { return eta.size(); }
  double step() const { return eta.step(); }
  const std::vector<double>& times() const { return eta.times; }

  const Matrix& metric_at(size_t k) const { return w[k]; }
  const Matrix& eta_at(size_t k) const { return eta.values[k]; }

  /// W between grid points, recomputed from linearly interpolated eta so the
  /// result stays positive-definite.
  Matrix metric_interp(double t) const;
};

/// Energy observable H(t_k) and geometric part K(t_k) with
/// H + iK = generator exactly by construction.
struct HamiltonianSplit {
  std::vector<double> times;
  std::vector<Matrix> h;
  std::vector<Matrix> k;
};

/// Integrate eta from eta0 and cache W(t_k) = eta^dag eta.
MetricTrajectory build_metric(const HamiltonianSchedule& schedule,
                              const Matrix& eta0, int steps,
                              const PropagateOptions& opt = {});

/// Split the generator at every grid point:
/// K = (i/2) W^{-1} (Hgen^dag W - W Hgen), H = Hgen - iK. The derivative of
/// W never enters; the metric flow identity supplies K algebraically.
/// Throws IllConditionedMetric when cond(W) exceeds cond_bound.
HamiltonianSplit split_hamiltonian(const HamiltonianSchedule& schedule,
                                   const MetricTrajectory& metric,
                                   double cond_bound = 1e12);

/// Closed forms for a time-independent diagonalizable generator:
/// W(t) = sum_i e^{-2 Im(w_i) t} |left_i><left_i|,
/// K = sum_i Im(w_i) |right_i><left_i|, H = sum_i Re(w_i) |right_i><left_i|.
struct ClosedFormSplit {
  BiorthonormalSystem system;
  Matrix h;
  Matrix k;

  Matrix metric_at(double t) const;
  /// eta(t) = diag(e^{i w_i t}) * (left bras); eta(0) rows are the left bras.
  Matrix eta_at(double t) const;
};

ClosedFormSplit closed_form_split(const Matrix& h0, double tol = -1.0);
/// Same closed forms evaluated on an externally chosen biorthonormal gauge.
ClosedFormSplit closed_form_split(const BiorthonormalSystem& system);

enum class PhaseClass { AllReal, ComplexPairs, Defective };

/// AllReal iff every eigenvalue has |Im| <= tol; Defective iff the
/// biorthonormal decomposition fails; ComplexPairs otherwise.
PhaseClass classify_phase(const Matrix& h0, double tol = 1e-10);

const char* to_string(PhaseClass c);

/// Rescale eta by a scalar so that min eig W(t_k) over the grid is exactly
/// 1 + margin. Required before building the Hermitian dilation.
MetricTrajectory ensure_dilation_ready(MetricTrajectory metric,
                                       double margin = 1e-6);

}  // namespace nhqm
