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

#include "nhqm/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Cholesky>

namespace nhqm {

Matrix MetricTrajectory::metric_interp(double t) const {
  const auto& times = eta.times;
  if (t <= times.front()) return w.front();
  if (t >= times.back()) return w.back();
  auto it = std::upper_bound(times.begin(), times.end(), t);
  size_t hi = static_cast<size_t>(it - times.begin());
  size_t lo = hi - 1;
  double frac = (t - times[lo]) / (times[hi] - times[lo]);
  Matrix eta_t = (1.0 - frac) * eta.values[lo] + frac * eta.values[hi];
  return eta_t.adjoint() * eta_t;
}

MetricTrajectory build_metric(const HamiltonianSchedule& schedule,
                              const Matrix& eta0, int steps,
                              const PropagateOptions& opt) {
  MetricTrajectory m;
  m.eta = propagate_eta(schedule, eta0, steps, opt);
  m.w.reserve(m.eta.size());
  for (const Matrix& e : m.eta.values) m.w.emplace_back(e.adjoint() * e);
  return m;
}

HamiltonianSplit split_hamiltonian(const HamiltonianSchedule& schedule,
                                   const MetricTrajectory& metric,
                                   double cond_bound) {
  HamiltonianSplit split;
  split.times = metric.times();
  split.h.reserve(metric.size());
  split.k.reserve(metric.size());
  for (size_t idx = 0; idx < metric.size(); ++idx) {
    const Matrix& w = metric.metric_at(idx);
    double cond = condition_number(w);
    if (!(cond < cond_bound)) {
      std::ostringstream msg;
      msg << "split_hamiltonian: cond(W) = " << cond << " at t="
          << split.times[idx] << " exceeds bound " << cond_bound;
      throw IllConditionedMetric(msg.str());
    }
    Matrix hgen = schedule(split.times[idx]);
    Matrix flow = hgen.adjoint() * w - w * hgen;
    Eigen::LDLT<Matrix> ldlt(w);
    Matrix k = 0.5 * imag_unit * ldlt.solve(flow);
    split.k.push_back(k);
    split.h.emplace_back(hgen - imag_unit * k);
  }
  return split;
}

Matrix ClosedFormSplit::metric_at(double t) const {
  const int d = system.dim();
  Matrix w = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    double decay = std::exp(-2.0 * system.eigenvalues[i].imag() * t);
    w += decay * (system.left.col(i) * system.left.col(i).adjoint());
  }
  return w;
}

Matrix ClosedFormSplit::eta_at(double t) const {
  const int d = system.dim();
  Vector ph(d);
  for (int i = 0; i < d; ++i)
    ph[i] = std::exp(imag_unit * system.eigenvalues[i] * t);
  return ph.asDiagonal() * system.left.adjoint();
}

ClosedFormSplit closed_form_split(const BiorthonormalSystem& system) {
  ClosedFormSplit cf;
  cf.system = system;
  const int d = system.dim();
  cf.h = Matrix::Zero(d, d);
  cf.k = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    Matrix proj = system.projector(i);
    cf.h += system.eigenvalues[i].real() * proj;
    cf.k += system.eigenvalues[i].imag() * proj;
  }
  return cf;
}

ClosedFormSplit closed_form_split(const Matrix& h0, double tol) {
  return closed_form_split(eig_biorthonormal(h0, tol));
}

PhaseClass classify_phase(const Matrix& h0, double tol) {
  BiorthonormalSystem sys;
  try {
    sys = eig_biorthonormal(h0);
  } catch (const NonDiagonalizable&) {
    return PhaseClass::Defective;
  }
  for (int i = 0; i < sys.dim(); ++i)
    if (std::abs(sys.eigenvalues[i].imag()) > tol)
      return PhaseClass::ComplexPairs;
  return PhaseClass::AllReal;
}

const char* to_string(PhaseClass c) {
  switch (c) {
    case PhaseClass::AllReal: return "AllReal";
    case PhaseClass::ComplexPairs: return "ComplexPairs";
    case PhaseClass::Defective: return "Defective";
  }
  return "?";
}

MetricTrajectory ensure_dilation_ready(MetricTrajectory metric,
                                       double margin) {
  double lam_min = std::numeric_limits<double>::infinity();
  for (const Matrix& w : metric.w)
    lam_min = std::min(lam_min, min_eigenvalue(w));
  if (!(lam_min > 0.0))
    throw NumericalError("ensure_dilation_ready: metric not positive-definite");
  const double c = std::sqrt((1.0 + margin) / lam_min);
  for (Matrix& e : metric.eta.values) e *= c;
  for (Matrix& w : metric.w) w *= c * c;
  metric.scale *= c;
  return metric;
}

}  // namespace nhqm
