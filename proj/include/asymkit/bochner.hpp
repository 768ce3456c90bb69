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

// Which functions on a finite group are characteristic functions of states,
// and how to realize one.
//
// A function f is the characteristic function of some state iff f(e) = 1 and
// every Fourier block B^(mu) = d_mu avg_g f(g^-1) U_mu(g) is PSD (equivalently
// the translated Gram matrix X[g][h] = f(g^-1 h) is PSD). The GNS
// construction turns X into a rep and a cyclic vector realizing f.

#include <limits>
#include <vector>

#include "asymkit/state.hpp"

namespace asymkit {

using CandidateFunction = CharFunction;

struct PositiveDefiniteReport {
  bool positive_definite = false;
  bool normalized = false;         // f(e) = 1
  bool hermitian_blocks = false;
  double min_eigenvalue = 0.0;     // most negative over all blocks
  int min_label = -1;              // irrep label where it occurs
  std::vector<double> block_min_eigenvalues;
};

/// Fourier-block test over all irreps of the group; `regular` must be the
/// decomposition of the group's regular rep.
inline PositiveDefiniteReport is_positive_definite(
    const CandidateFunction& f, const IrrepDecomposition& regular,
    double tol = Tolerance::kDefault) {
  require_same_group(f.group, regular.group);
  require(f.size() == f.group->order(), ErrorKind::InvalidParameter,
          "one value per group element");
  PositiveDefiniteReport rep;
  rep.normalized = std::abs(f[0] - cplx(1.0)) <= tol;
  rep.hermitian_blocks = true;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  const IrrepReduction blocks = fourier_inverse(f, regular);
  bool psd = true;
  for (std::size_t mu = 0; mu < blocks.blocks.size(); ++mu) {
    const Mat& b = blocks.blocks[mu];
    const double scale = Tolerance::scaled(tol, b.norm());
    if (hermiticity_residual(b) > scale) {
      rep.hermitian_blocks = false;
      psd = false;
    }
    const double ev = min_eigenvalue(b);
    rep.block_min_eigenvalues.push_back(ev);
    if (ev < rep.min_eigenvalue) {
      rep.min_eigenvalue = ev;
      rep.min_label = static_cast<int>(mu);
    }
    if (ev < -scale) psd = false;
  }
  rep.positive_definite = psd;
  return rep;
}

struct GnsResult {
  UnitaryRep rep;
  QuantumState state;
  int dim = 0;
};

/// X[g][h] = f(g^-1 h)
inline Mat translated_gram(const CandidateFunction& f) {
  const GroupTable& g = *f.group;
  Mat x(g.order(), g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) x(a, b) = f[g.mul(g.inv(a), b)];
  return x;
}

/// Rep and cyclic vector with <v|U(g)|v> = f(g), of dimension rank(X).
inline GnsResult gns_construct(const CandidateFunction& f,
                               double tol = Tolerance::kDefault) {
  const GroupTable& g = *f.group;
  const int n = g.order();
  require(f.size() == n, ErrorKind::InvalidParameter,
          "one value per group element");
  require(std::abs(f[0] - cplx(1.0)) <= tol,
          ErrorKind::InvalidCharacteristicFunction, "f(e) = 1");
  const Mat x = translated_gram(f);
  const double scale = Tolerance::scaled(tol, x.norm());
  require(hermiticity_residual(x) <= scale,
          ErrorKind::InvalidCharacteristicFunction,
          "f positive definite (f(g^-1) = conj f(g))");
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(x));
  const RealVec& ev = es.eigenvalues();
  require(ev(0) >= -scale, ErrorKind::InvalidCharacteristicFunction,
          "f positive definite (translated Gram matrix PSD)");

  const double rank_tol = 1e-10 * ev(n - 1);
  std::vector<int> kept;
  for (int i = n - 1; i >= 0; --i)
    if (ev(i) > rank_tol) kept.push_back(i);
  const int r = static_cast<int>(kept.size());
  Mat e(n, r);
  RealVec lam(r);
  for (int k = 0; k < r; ++k) {
    e.col(k) = es.eigenvectors().col(kept[k]);
    lam(k) = ev(kept[k]);
  }
  // columns v_g of V = sqrt(L) E^dagger satisfy <v_g|v_h> = X[g][h];
  // U(k) V = V P_k with P_k |g> = |kg>, so U(k) = V P_k E L^{-1/2}
  const Mat v = lam.cwiseSqrt().asDiagonal() * e.adjoint();
  const RealVec inv_root = lam.cwiseSqrt().cwiseInverse();
  std::vector<Mat> mats(n);
  for (int k = 0; k < n; ++k) {
    Mat vp(r, n);  // V P_k: column g of V P_k is v_{kg}
    for (int h = 0; h < n; ++h) vp.col(h) = v.col(g.mul(k, h));
    mats[k] = vp * e * inv_root.asDiagonal();
  }
  mats[0] = Mat::Identity(r, r);
  UnitaryRep rep(f.group, std::move(mats), 1e-7);
  Vec psi = v.col(0);
  return {std::move(rep), QuantumState::pure(std::move(psi), 1e-8), r};
}

}  // namespace asymkit
