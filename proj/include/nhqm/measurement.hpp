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

#include <utility>
#include <vector>

#include "nhqm/linalg.hpp"
#include "nhqm/types.hpp"

namespace nhqm {

/// Spectral data of an operator that is Hermitian under the metric W:
/// real eigenvalues, W-orthonormal eigenvector columns.
struct Observable {
  RealVector eigenvalues;
  Matrix eigenvectors;  // column i satisfies <a_i|W|a_j> = delta_ij
  Matrix w;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  /// Rank-one projector |a_i><a_i| W.
  Matrix projector(int i) const {
    return eigenvectors.col(i) * (eigenvectors.col(i).adjoint() * w);
  }
  /// A = sum_i a_i |a_i><a_i| W.
  Matrix reconstruct() const;
};

/// Energy levels after grouping nearly-degenerate eigenvalues, with rank-k
/// projectors Pi_n = sum_{i in group} |a_i><a_i| W satisfying
/// Pi_m Pi_n = delta_mn Pi_n and sum_n Pi_n = I.
struct SpectralProjectors {
  RealVector levels;
  std::vector<Matrix> projectors;
  bool grouping_applied = false;

  int count() const { return static_cast<int>(levels.size()); }
};

/// Physically Hermitian state: unit trace, W rho = rho^dag W, W rho PSD.
struct DensityOperator {
  Matrix rho;
  Matrix w;
};

/// Decompose an operator A that is Hermitian under W. Internally maps to the
/// conventionally Hermitian eta A eta^{-1} (W = eta^dag eta by Cholesky), so
/// the returned eigenvectors are exactly W-orthonormal. Throws
/// NotPhysicallyHermitian when the precondition fails.
Observable observable_from_operator(const Matrix& a, const Matrix& w,
                                    double tol = 1e-9);

/// Group eigenvalues within group_tol * max(1, spectral range).
SpectralProjectors spectral_projectors(const Observable& obs,
                                       double group_tol = 1e-8);

/// rho = sum_i p_i |psi_i><psi_i| W for weights p_i > 0 summing to 1 and
/// states with <psi|W|psi> = 1.
DensityOperator ensemble_density(
    const std::vector<std::pair<double, Vector>>& states, const Matrix& w,
    double tol = 1e-8);

DensityOperator pure_density(const Vector& psi, const Matrix& w,
                             double tol = 1e-8);

/// P_i = tr[|a_i><a_i| W rho]; negative round-off within tol is clamped and
/// renormalized (warning on stderr).
RealVector outcome_probabilities(const Observable& obs,
                                 const DensityOperator& rho,
                                 double tol = 1e-10);

/// sum_i a_i P_i = Re tr[A rho].
double expectation(const Observable& obs, const DensityOperator& rho,
                   double tol = 1e-10);

/// rho = e^{-beta H} / Z through the W-orthonormal eigenbasis of H.
DensityOperator gibbs_state(const Matrix& h, const Matrix& w, double beta,
                            double tol = 1e-9);

/// Z = sum_n e^{-beta eps_n} over the real spectrum of H under W.
double partition_function(const Matrix& h, const Matrix& w, double beta,
                          double tol = 1e-9);

/// Scale psi so <psi|W|psi> = 1.
Vector metric_normalize(const Vector& psi, const Matrix& w);

/// Metric-weighted Gram-Schmidt of the columns of `basis` under W.
Matrix metric_orthonormalize(const Matrix& basis, const Matrix& w);

}  // namespace nhqm
