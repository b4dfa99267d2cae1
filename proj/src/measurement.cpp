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

#include "nhqm/measurement.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace nhqm {

Matrix Observable::reconstruct() const {
  Matrix a = Matrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) a += eigenvalues[i] * projector(i);
  return a;
}

Observable observable_from_operator(const Matrix& a, const Matrix& w,
                                    double tol) {
  if (!is_physically_hermitian(a, w, tol)) {
    std::ostringstream msg;
    msg << "observable_from_operator: ||WA - A^dag W|| exceeds " << tol
        << " * ||WA||; wrong metric or non-observable input";
    throw NotPhysicallyHermitian(msg.str());
  }
  Eigen::LLT<Matrix> llt(w);
  if (llt.info() != Eigen::Success)
    throw NotPSD("observable_from_operator: metric not positive-definite");
  // W = L L^dag; eta = L^dag maps A to the conventionally Hermitian
  // B = eta A eta^{-1}, computed as B = (L^{-1} A^dag L)^dag.
  Matrix l = llt.matrixL();
  Matrix bdag = l.triangularView<Eigen::Lower>().solve(Matrix(a.adjoint() * l));
  Matrix b = bdag.adjoint();
  b = 0.5 * (b + b.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(b);

  Observable obs;
  obs.eigenvalues = es.eigenvalues();
  // |a_i> = eta^{-1} u_i, automatically W-orthonormal
  Matrix lt = l.adjoint();
  obs.eigenvectors = lt.triangularView<Eigen::Upper>().solve(es.eigenvectors());
  obs.w = w;
  return obs;
}

SpectralProjectors spectral_projectors(const Observable& obs,
                                       double group_tol) {
  const int d = obs.dim();
  const double scale =
      std::max(1.0, obs.eigenvalues.cwiseAbs().maxCoeff());
  SpectralProjectors sp;
  std::vector<double> levels;
  std::vector<Matrix> projs;
  int i = 0;
  while (i < d) {
    int j = i;
    // eigenvalues come sorted ascending from the self-adjoint solver
    while (j + 1 < d &&
           obs.eigenvalues[j + 1] - obs.eigenvalues[j] <= group_tol * scale)
      ++j;
    Matrix pi = Matrix::Zero(d, d);
    double mean = 0.0;
    for (int m = i; m <= j; ++m) {
      pi += obs.projector(m);
      mean += obs.eigenvalues[m];
    }
    levels.push_back(mean / (j - i + 1));
    projs.push_back(pi);
    if (j > i) sp.grouping_applied = true;
    i = j + 1;
  }
  sp.levels = Eigen::Map<RealVector>(levels.data(),
                                     static_cast<long>(levels.size()));
  sp.projectors = std::move(projs);
  return sp;
}

Vector metric_normalize(const Vector& psi, const Matrix& w) {
  double n2 = std::real(Complex(psi.adjoint() * w * psi));
  if (!(n2 > 0.0))
    throw UnnormalizedState("metric_normalize: state has nonpositive W-norm");
  return psi / std::sqrt(n2);
}

Matrix metric_orthonormalize(const Matrix& basis, const Matrix& w) {
  Matrix out = basis;
  const int n = static_cast<int>(basis.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      Complex overlap = out.col(j).adjoint() * w * out.col(i);
      out.col(i) -= overlap * out.col(j);
    }
    out.col(i) = metric_normalize(out.col(i), w);
  }
  return out;
}

DensityOperator ensemble_density(
    const std::vector<std::pair<double, Vector>>& states, const Matrix& w,
    double tol) {
  if (states.empty()) throw BadWeights("ensemble_density: empty ensemble");
  double total = 0.0;
  for (const auto& [p, psi] : states) {
    if (!(p > 0.0)) throw BadWeights("ensemble_density: weights must be > 0");
    total += p;
    double n2 = std::real(Complex(psi.adjoint() * w * psi));
    if (std::abs(n2 - 1.0) > tol) {
      std::ostringstream msg;
      msg << "ensemble_density: <psi|W|psi> = " << n2 << ", expected 1";
      throw UnnormalizedState(msg.str());
    }
  }
  if (std::abs(total - 1.0) > tol)
    throw BadWeights("ensemble_density: weights must sum to 1");

  const int d = static_cast<int>(w.rows());
  Matrix rho = Matrix::Zero(d, d);
  for (const auto& [p, psi] : states)
    rho += p * (psi * (psi.adjoint() * w));
  return DensityOperator{rho, w};
}

DensityOperator pure_density(const Vector& psi, const Matrix& w, double tol) {
  return ensemble_density({{1.0, psi}}, w, tol);
}

RealVector outcome_probabilities(const Observable& obs,
                                 const DensityOperator& rho, double tol) {
  if ((obs.w - rho.w).norm() > 1e-10 * std::max(1.0, obs.w.norm()))
    throw MetricMismatch(
        "outcome_probabilities: observable and state carry different metrics");
  const int d = obs.dim();
  RealVector p(d);
  for (int i = 0; i < d; ++i) {
    // tr[|a_i><a_i| W rho] = <a_i| W rho |a_i>
    Complex val = obs.eigenvectors.col(i).adjoint() * obs.w * rho.rho *
                  obs.eigenvectors.col(i);
    p[i] = val.real();
  }
  bool clamped = false;
  for (int i = 0; i < d; ++i) {
    if (p[i] < 0.0) {
      if (p[i] < -tol) {
        std::ostringstream msg;
        msg << "outcome_probabilities: probability " << p[i]
            << " below -tol; state not positive under the metric";
        throw NumericalError(msg.str());
      }
      p[i] = 0.0;
      clamped = true;
    }
  }
  if (clamped) {
    std::cerr << "nhqm: warning: clamped round-off negative probabilities\n";
    p /= p.sum();
  }
  return p;
}

double expectation(const Observable& obs, const DensityOperator& rho,
                   double tol) {
  RealVector p = outcome_probabilities(obs, rho, tol);
  return obs.eigenvalues.dot(p);
}

DensityOperator gibbs_state(const Matrix& h, const Matrix& w, double beta,
                            double tol) {
  if (beta < 0.0) throw InvalidConfig("gibbs_state: beta must be >= 0");
  Observable obs = observable_from_operator(h, w, tol);
  const int d = obs.dim();
  const double shift = obs.eigenvalues.minCoeff();
  RealVector weight(d);
  for (int i = 0; i < d; ++i)
    weight[i] = std::exp(-beta * (obs.eigenvalues[i] - shift));
  weight /= weight.sum();
  Matrix rho = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) rho += weight[i] * obs.projector(i);
  return DensityOperator{rho, w};
}

double partition_function(const Matrix& h, const Matrix& w, double beta,
                          double tol) {
  Observable obs = observable_from_operator(h, w, tol);
  double z = 0.0;
  for (int i = 0; i < obs.dim(); ++i) z += std::exp(-beta * obs.eigenvalues[i]);
  return z;
}

}  // namespace nhqm
