// Copyright 2026 The asymkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear-algebra helpers shared by every module.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "asymkit/error.hpp"

namespace asymkit {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr double kPi = std::numbers::pi;

/// Global tolerance policy: absolute tol scaled by max(1, norm of input).
struct Tolerance {
  static constexpr double kDefault = 1e-9;
  static double scaled(double tol, double norm) {
    return tol * std::max(1.0, norm);
  }
};

inline cplx phase(double angle) { return std::polar(1.0, angle); }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat direct_sum(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

inline double hermiticity_residual(const Mat& a) {
  return (a - a.adjoint()).norm();
}

inline Mat hermitian_part(const Mat& a) { return 0.5 * (a + a.adjoint()); }

inline double min_eigenvalue(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(a),
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// True if a is Hermitian and PSD within tol * max(1, |a|).
inline bool is_psd(const Mat& a, double tol = Tolerance::kDefault) {
  const double scale = Tolerance::scaled(tol, a.norm());
  if (hermiticity_residual(a) > scale) return false;
  return min_eigenvalue(a) >= -scale;
}

/// Square root of a Hermitian PSD matrix; eigenvalues in [-tol, 0) are
/// clamped to zero, more negative ones raise non-psd. Eigenvalues below the
/// eigensolver's noise floor are also zeroed so rank-deficient inputs give
/// rank-deficient roots.
inline Mat sqrt_psd(const Mat& a, double tol = Tolerance::kDefault) {
  if (a.size() == 0) return a;
  const double scale = Tolerance::scaled(tol, a.norm());
  require(hermiticity_residual(a) <= scale, ErrorKind::NonPsd,
          "matrix must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(a));
  RealVec ev = es.eigenvalues();
  require(ev.size() == 0 || ev(0) >= -scale, ErrorKind::NonPsd,
          "minimum eigenvalue >= -tol");
  const double floor = 1e-13 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  RealVec root = ev.unaryExpr([floor](double x) {
    return x > floor ? std::sqrt(x) : 0.0;
  });
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

inline double trace_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues().sum();
}

/// Trace norm of a Hermitian matrix as the sum of |eigenvalues|.
inline double trace_norm_hermitian(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(a),
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

/// Unitary polar factor of a square matrix, U V^dagger from the full SVD.
/// On rank-deficient input the kernel is mapped onto the cokernel by the
/// completion the SVD happens to pick.
inline Mat polar_unitary(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

/// Orthonormal basis of the orthogonal complement of the column span of an
/// isometry q (d x r).
inline Mat orthogonal_complement(const Mat& q) {
  const Eigen::Index d = q.rows();
  const Eigen::Index r = q.cols();
  if (r == 0) return Mat::Identity(d, d);
  Eigen::HouseholderQR<Mat> qr(q);
  Mat full = qr.householderQ() * Mat::Identity(d, d);
  return full.rightCols(d - r);
}

inline double unitarity_residual(const Mat& u) {
  return (u * u.adjoint() - Mat::Identity(u.rows(), u.rows())).norm();
}

// ---------------------------------------------------------------------------
// seeded sampling

inline Mat ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cplx(n(rng), n(rng));
  return m;
}

/// Haar-random unitary (QR of a Ginibre matrix with the R-diagonal phases
/// divided out).
inline Mat haar_unitary(Eigen::Index d, Rng& rng) {
  if (d == 0) return Mat(0, 0);
  Mat z = ginibre(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    const cplx rii = r(i, i);
    const double mag = std::abs(rii);
    q.col(i) *= mag > 0 ? rii / mag : cplx(1.0);
  }
  return q;
}

inline Mat random_hermitian(Eigen::Index d, Rng& rng) {
  Mat g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

inline Vec random_unit_vector(Eigen::Index d, Rng& rng) {
  Vec v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

/// Random full-rank density matrix (normalized Wishart).
inline Mat random_density_matrix(Eigen::Index d, Rng& rng) {
  Mat g = ginibre(d, d, rng);
  Mat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace asymkit
