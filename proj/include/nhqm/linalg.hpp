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
#include "nhqm/types.hpp"

namespace nhqm {

/// Paired right/left eigenvectors of a diagonalizable matrix M, with
/// <left_i|right_j> = delta_ij and sum_i |right_i><left_i| = I.
///
/// Gauge: right eigenvectors have unit conventional norm; all scale sits in
/// the left set. Columns of `right` are kets |phi_i>; columns of `left` are
/// kets whose adjoints are the dual bras.
struct BiorthonormalSystem {
  Vector eigenvalues;
  Matrix right;
  Matrix left;

  int dim() const { return static_cast<int>(eigenvalues.size()); }

  /// Bra of mode i as a row vector.
  Eigen::RowVectorXcd bra(int i) const { return left.col(i).adjoint(); }

  /// Rank-one spectral projector |right_i><left_i| (gauge invariant).
  Matrix projector(int i) const {
    return right.col(i) * left.col(i).adjoint();
  }

  /// Reconstruction sum_i w_i |right_i><left_i|.
  Matrix reconstruct() const;

  double biorthogonality_defect() const;
  double completeness_defect() const;
};

/// Decompose M into a complete biorthonormal eigensystem.
///
/// tol bounds the reconstruction residual and the biorthonormality defects;
/// tol <= 0 selects the default 1e-10 * max(1, ||M||). Throws
/// NonDiagonalizable when the residuals cannot be met (defective input,
/// e.g. at an exceptional point).
BiorthonormalSystem eig_biorthonormal(const Matrix& m, double tol = -1.0);

/// True iff W is Hermitian within tol (else throws NotHermitian) and its
/// smallest eigenvalue exceeds tol.
bool is_positive_definite(const Matrix& w, double tol = 1e-10);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& w);

/// Hermiticity with respect to the metric W: ||WX - X^dag W|| <= tol ||WX||.
bool is_physically_hermitian(const Matrix& x, const Matrix& w,
                             double tol = 1e-9);

/// Hermitian square root with nonnegative spectrum. Throws NotPSD if an
/// eigenvalue falls below -tol; eigenvalues in [-tol, 0) are clamped to 0.
Matrix principal_sqrt(const Matrix& p, double tol = 1e-10);

/// 2-norm condition number via SVD.
double condition_number(const Matrix& m);

}  // namespace nhqm
