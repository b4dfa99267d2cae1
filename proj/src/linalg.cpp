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

#include "nhqm/linalg.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace nhqm {

Matrix BiorthonormalSystem::reconstruct() const {
  return right * eigenvalues.asDiagonal() * left.adjoint();
}

double BiorthonormalSystem::biorthogonality_defect() const {
  Matrix overlap = left.adjoint() * right;
  return (overlap - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

double BiorthonormalSystem::completeness_defect() const {
  return (right * left.adjoint() - Matrix::Identity(dim(), dim())).norm();
}

BiorthonormalSystem eig_biorthonormal(const Matrix& m, double tol) {
  if (!is_square(m)) throw NumericalError("eig_biorthonormal: matrix not square");
  if (!all_finite(m)) throw NumericalError("eig_biorthonormal: non-finite entries");
  const int d = static_cast<int>(m.rows());
  if (tol <= 0.0) tol = 1e-10 * std::max(1.0, m.norm());

  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw NonDiagonalizable("eig_biorthonormal: eigensolver failed to converge");

  BiorthonormalSystem sys;
  sys.eigenvalues = solver.eigenvalues();
  sys.right = solver.eigenvectors();
  for (int i = 0; i < d; ++i) sys.right.col(i).normalize();

  // Dual set from the inverse of the right-vector matrix. This enforces both
  // biorthonormality and completeness; near an exceptional point the inverse
  // blows up and the reconstruction residual exposes it.
  Eigen::PartialPivLU<Matrix> lu(sys.right);
  Matrix left_rows = lu.solve(Matrix::Identity(d, d));
  sys.left = left_rows.adjoint();

  const double recon = (sys.reconstruct() - m).norm();
  const double bio = sys.biorthogonality_defect();
  const double comp = sys.completeness_defect();
  if (!(recon <= tol && bio <= tol && comp <= tol) ||
      !all_finite(sys.left)) {
    std::ostringstream msg;
    msg << "eig_biorthonormal: defective or ill-conditioned matrix"
        << " (reconstruction residual " << recon << ", biorthogonality defect "
        << bio << ", completeness defect " << comp << ", tol " << tol << ")";
    throw NonDiagonalizable(msg.str());
  }
  return sys;
}

double min_eigenvalue(const Matrix& w) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(w, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_positive_definite(const Matrix& w, double tol) {
  if (!is_square(w)) throw NumericalError("is_positive_definite: matrix not square");
  if (hermiticity_defect(w) > tol) {
    std::ostringstream msg;
    msg << "is_positive_definite: input not Hermitian, defect "
        << hermiticity_defect(w) << " > " << tol;
    throw NotHermitian(msg.str());
  }
  Matrix h = 0.5 * (w + w.adjoint());
  return min_eigenvalue(h) > tol;
}

bool is_physically_hermitian(const Matrix& x, const Matrix& w, double tol) {
  Matrix wx = w * x;
  double defect = (wx - x.adjoint() * w).norm();
  return defect <= tol * wx.norm();
}

Matrix principal_sqrt(const Matrix& p, double tol) {
  if (!is_square(p)) throw NumericalError("principal_sqrt: matrix not square");
  const double scale = std::max(1.0, p.norm());
  if (hermiticity_defect(p) > tol * scale)
    throw NotHermitian("principal_sqrt: input not Hermitian");
  Matrix h = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  RealVector lam = es.eigenvalues();
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] < -tol * scale) {
      std::ostringstream msg;
      msg << "principal_sqrt: eigenvalue " << lam[i] << " below -tol";
      throw NotPSD(msg.str());
    }
    lam[i] = std::sqrt(std::max(lam[i], 0.0));
  }
  return es.eigenvectors() * lam.asDiagonal() *
         es.eigenvectors().adjoint();
}

double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

}  // namespace nhqm
