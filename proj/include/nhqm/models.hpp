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

#include <cstdint>
#include <vector>

#include "nhqm/linalg.hpp"
#include "nhqm/types.hpp"

namespace nhqm::models {

/// Two-level gain/loss model kappa * [[i a, -1], [-1, -i a]] with
/// eigenvalues +/- kappa sqrt(1 - a^2); defective at a = 1.
Matrix pt2x2(double kappa, double alpha);

/// Closed-form biorthonormal modes of pt2x2 in the balanced normalization
/// (equal right/left norms). Throws NonDiagonalizable at alpha = 1.
BiorthonormalSystem pt2x2_modes(double kappa, double alpha);

/// Closed-form metric of the pt2x2 model in the gauge of pt2x2_modes:
/// time-independent for alpha < 1, exponentially stretching for alpha > 1.
Matrix pt2x2_metric(double kappa, double alpha, double t);

Matrix diagonal(const std::vector<Complex>& entries);

/// Ginibre-style matrix scaled to spectral norm `norm_bound`, mixed as
/// Hermitian part + nonhermiticity * anti-Hermitian part. nonhermiticity = 0
/// gives a Hermitian draw, 1 the full Ginibre matrix.
Matrix random_hamiltonian(int dim, std::uint64_t seed, double norm_bound = 1.0,
                          double nonhermiticity = 1.0);

/// Haar-like random unitary via QR of a Ginibre draw, phase-fixed.
Matrix random_unitary(int dim, std::uint64_t seed);

/// Random state with unit conventional norm.
Vector random_state(int dim, std::uint64_t seed);

}  // namespace nhqm::models
