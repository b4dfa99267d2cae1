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

#include "nhqm/errors.hpp"
#include "nhqm/schedule.hpp"
#include "nhqm/trajectory.hpp"

namespace nhqm {

/// Fixed-step RK4 with per-step step-doubling error control. Each grid
/// interval is advanced by two half steps (the accepted value) and one full
/// step whose deviation serves as the local error estimate.
struct PropagateOptions {
  double step_error_tol = 1e-6;  // relative per-step local error bound
  double eta_cond_bound = 1e12;  // condition-number bound for eta(t_k)
};

/// Solve i d/dt psi = H(t) psi on the schedule grid. psi(0) = psi0 exactly.
StateTrajectory propagate_state(const HamiltonianSchedule& schedule,
                                const Vector& psi0, int steps,
                                const PropagateOptions& opt = {});

/// Solve i d/dt eta = -eta H(t); eta(0) = eta0 (must be invertible).
/// Throws SingularEta when cond(eta) exceeds the configured bound.
MatrixTrajectory propagate_eta(const HamiltonianSchedule& schedule,
                               const Matrix& eta0, int steps,
                               const PropagateOptions& opt = {});

/// Time-ordered evolution operator U(tau) by propagating the identity.
Matrix evolution_operator(const HamiltonianSchedule& schedule, int steps,
                          const PropagateOptions& opt = {});

/// Same integration, full trajectory of U(t_k).
MatrixTrajectory evolution_operator_trajectory(
    const HamiltonianSchedule& schedule, int steps,
    const PropagateOptions& opt = {});

/// Solve i d/dt rho = [H(t), rho]; trace is preserved.
MatrixTrajectory propagate_density(const HamiltonianSchedule& schedule,
                                   const Matrix& rho0, int steps,
                                   const PropagateOptions& opt = {});

}  // namespace nhqm
