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

#include "nhqm/models.hpp"

#include <cmath>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "nhqm/errors.hpp"

namespace nhqm::models {

Matrix pt2x2(double kappa, double alpha) {
  if (kappa <= 0.0 || alpha <= 0.0)
    throw InvalidConfig("pt2x2: kappa and alpha must be positive");
  Matrix h(2, 2);
  h << Complex(0.0, kappa * alpha), Complex(-kappa, 0.0),
       Complex(-kappa, 0.0), Complex(0.0, -kappa * alpha);
  return h;
}

BiorthonormalSystem pt2x2_modes(double kappa, double alpha) {
  if (alpha == 1.0)
    throw NonDiagonalizable("pt2x2_modes: defective at alpha = 1");
  BiorthonormalSystem sys;
  sys.eigenvalues.resize(2);
  sys.right.resize(2, 2);
  sys.left.resize(2, 2);
  if (alpha < 1.0) {
    const double theta = std::asin(alpha);
    const double c = 1.0 / std::sqrt(2.0 * std::cos(theta));
    const Complex eh = std::exp(imag_unit * (theta / 2.0));
    const Complex el = std::exp(-imag_unit * (theta / 2.0));
    // first mode carries -kappa cos(theta), second +kappa cos(theta)
    sys.eigenvalues << Complex(-kappa * std::cos(theta), 0.0),
        Complex(kappa * std::cos(theta), 0.0);
    sys.right.col(0) << c * el, c * eh;
    sys.right.col(1) << c * eh, -c * el;
    sys.left.col(0) << c * eh, c * el;
    sys.left.col(1) << c * el, -c * eh;
  } else {
    const double theta = std::acosh(alpha);
    const double c = 1.0 / std::sqrt(2.0 * std::sinh(theta));
    const double ep = std::exp(theta / 2.0);
    const double em = std::exp(-theta / 2.0);
    sys.eigenvalues << Complex(0.0, kappa * std::sinh(theta)),
        Complex(0.0, -kappa * std::sinh(theta));
    sys.right.col(0) << Complex(c * ep, 0.0), Complex(0.0, c * em);
    sys.right.col(1) << Complex(c * em, 0.0), Complex(0.0, c * ep);
    sys.left.col(0) << Complex(c * ep, 0.0), Complex(0.0, -c * em);
    sys.left.col(1) << Complex(-c * em, 0.0), Complex(0.0, c * ep);
  }
  return sys;
}

Matrix pt2x2_metric(double kappa, double alpha, double t) {
  Matrix w(2, 2);
  if (alpha < 1.0) {
    const double theta = std::asin(alpha);
    const double sec = 1.0 / std::cos(theta);
    w << Complex(sec, 0.0), Complex(0.0, sec * std::sin(theta)),
         Complex(0.0, -sec * std::sin(theta)), Complex(sec, 0.0);
  } else if (alpha > 1.0) {
    const double theta = std::acosh(alpha);
    const double s = std::sinh(theta);
    const double u = 2.0 * kappa * t * s;
    w << Complex(std::cosh(theta - u) / s, 0.0),
         Complex(0.0, std::cosh(u) / s),
         Complex(0.0, -std::cosh(u) / s),
         Complex(std::cosh(theta + u) / s, 0.0);
  } else {
    throw NonDiagonalizable("pt2x2_metric: defective at alpha = 1");
  }
  return w;
}

Matrix diagonal(const std::vector<Complex>& entries) {
  if (entries.empty()) throw InvalidConfig("diagonal: entries must be nonempty");
  const int d = static_cast<int>(entries.size());
  Matrix h = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) h(i, i) = entries[static_cast<size_t>(i)];
  return h;
}

namespace {

Matrix ginibre(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  return g;
}

double spectral_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

Matrix random_hamiltonian(int dim, std::uint64_t seed, double norm_bound,
                          double nonhermiticity) {
  if (dim < 1) throw InvalidConfig("random_hamiltonian: dim must be >= 1");
  if (norm_bound <= 0.0)
    throw InvalidConfig("random_hamiltonian: norm_bound must be positive");
  std::mt19937_64 rng(seed);
  Matrix g = ginibre(dim, rng);
  Matrix herm = 0.5 * (g + g.adjoint());
  Matrix anti = 0.5 * (g - g.adjoint());
  Matrix h = herm + nonhermiticity * anti;
  double norm = spectral_norm(h);
  if (norm > 0.0) h *= norm_bound / norm;
  return h;
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity of QR so the draw is deterministic and Haar-like
  for (int i = 0; i < dim; ++i) {
    Complex rii = r(i, i);
    if (std::abs(rii) > 0.0) q.col(i) *= rii / std::abs(rii);
  }
  return q;
}

Vector random_state(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

}  // namespace nhqm::models
