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

#include "nhqm/dynamics.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "nhqm/linalg.hpp"

namespace nhqm {

namespace {

template <class State, class Rhs>
State rk4_step(const Rhs& rhs, double t, double h, const State& y) {
  State k1 = rhs(t, y);
  State k2 = rhs(t + 0.5 * h, State(y + 0.5 * h * k1));
  State k3 = rhs(t + 0.5 * h, State(y + 0.5 * h * k2));
  State k4 = rhs(t + h, State(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Advance one grid interval: accepted value from two half steps, full step
// only for the local error estimate.
template <class State, class Rhs>
State advance_checked(const Rhs& rhs, double t, double h, const State& y,
                      const PropagateOptions& opt) {
  State full = rk4_step(rhs, t, h, y);
  State half = rk4_step(rhs, t, 0.5 * h, y);
  half = rk4_step(rhs, t + 0.5 * h, 0.5 * h, half);
  double err = (full - half).norm();
  double scale = std::max(half.norm(), 1.0);
  if (!(err <= opt.step_error_tol * scale)) {
    std::ostringstream msg;
    msg << "step-doubling error estimate " << err / scale << " exceeds "
        << opt.step_error_tol << " at t=" << t << " (h=" << h << ")";
    throw StepTooCoarse(msg.str());
  }
  return half;
}

template <class State, class Rhs>
Trajectory<State> integrate(const Rhs& rhs, const State& y0, double tau,
                            int steps, const PropagateOptions& opt) {
  if (steps < 1) throw InvalidConfig("propagate: steps must be >= 1");
  Trajectory<State> traj;
  traj.times = uniform_grid(tau, steps);
  traj.values.reserve(traj.times.size());
  traj.values.push_back(y0);
  const double h = tau / steps;
  State y = y0;
  for (int k = 0; k < steps; ++k) {
    y = advance_checked(rhs, traj.times[static_cast<size_t>(k)], h, y, opt);
    if (!y.allFinite())
      throw NumericalError("propagate: non-finite values during integration");
    traj.values.push_back(y);
  }
  return traj;
}

}  // namespace

StateTrajectory propagate_state(const HamiltonianSchedule& schedule,
                                const Vector& psi0, int steps,
                                const PropagateOptions& opt) {
  if (psi0.size() != schedule.dim())
    throw InvalidConfig("propagate_state: psi0 dimension mismatch");
  if (psi0.norm() == 0.0)
    throw InvalidConfig("propagate_state: psi0 must be nonzero");
  auto rhs = [&schedule](double t, const Vector& psi) {
    return Vector(-imag_unit * (schedule(t) * psi));
  };
  return integrate(rhs, psi0, schedule.tau(), steps, opt);
}

MatrixTrajectory propagate_eta(const HamiltonianSchedule& schedule,
                               const Matrix& eta0, int steps,
                               const PropagateOptions& opt) {
  if (eta0.rows() != schedule.dim() || eta0.cols() != schedule.dim())
    throw InvalidConfig("propagate_eta: eta0 dimension mismatch");
  // i eta' = -eta H  =>  eta' = i eta H
  auto rhs = [&schedule](double t, const Matrix& eta) {
    return Matrix(imag_unit * (eta * schedule(t)));
  };
  MatrixTrajectory traj = integrate(rhs, eta0, schedule.tau(), steps, opt);
  for (size_t k = 0; k < traj.size(); ++k) {
    double cond = condition_number(traj.values[k]);
    if (!(cond < opt.eta_cond_bound)) {
      std::ostringstream msg;
      msg << "propagate_eta: cond(eta) = " << cond << " at t=" << traj.times[k]
          << " exceeds bound " << opt.eta_cond_bound;
      throw SingularEta(msg.str());
    }
  }
  return traj;
}

MatrixTrajectory evolution_operator_trajectory(
    const HamiltonianSchedule& schedule, int steps,
    const PropagateOptions& opt) {
  auto rhs = [&schedule](double t, const Matrix& u) {
    return Matrix(-imag_unit * (schedule(t) * u));
  };
  Matrix u0 = Matrix::Identity(schedule.dim(), schedule.dim());
  return integrate(rhs, u0, schedule.tau(), steps, opt);
}

Matrix evolution_operator(const HamiltonianSchedule& schedule, int steps,
                          const PropagateOptions& opt) {
  return evolution_operator_trajectory(schedule, steps, opt).back();
}

MatrixTrajectory propagate_density(const HamiltonianSchedule& schedule,
                                   const Matrix& rho0, int steps,
                                   const PropagateOptions& opt) {
  if (rho0.rows() != schedule.dim() || rho0.cols() != schedule.dim())
    throw InvalidConfig("propagate_density: rho0 dimension mismatch");
  if (std::abs(rho0.trace() - Complex(1.0, 0.0)) > 1e-8)
    throw InvalidConfig("propagate_density: rho0 must have unit trace");
  auto rhs = [&schedule](double t, const Matrix& rho) {
    Matrix h = schedule(t);
    return Matrix(-imag_unit * (h * rho - rho * h));
  };
  return integrate(rhs, rho0, schedule.tau(), steps, opt);
}

}  // namespace nhqm
