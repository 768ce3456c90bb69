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

// Quantum channels in Kraus form, their Choi matrices, G-covariance and
// group twirls.
//
// Choi convention: J = sum_{ij} |i><j| (x) E(|i><j|), so that the Kraus
// operator K contributes vec(K) vec(K)^dagger with vec(K)[i * d_out + a] =
// K(a, i) (column stacking). Under this convention
//   vec(A K B) = (B^T (x) A) vec(K).

#include <utility>
#include <vector>

#include "asymkit/state.hpp"

namespace asymkit {

class QuantumChannel {
 public:
  /// Validates shapes and trace preservation sum_k K^dagger K = I.
  QuantumChannel(int d_in, int d_out, std::vector<Mat> kraus,
                 double tol = 1e-8)
      : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
    require(d_in >= 1 && d_out >= 1, ErrorKind::InvalidChannel,
            "d_in, d_out >= 1");
    require(!kraus_.empty(), ErrorKind::InvalidChannel,
            "at least one Kraus operator");
    Mat acc = Mat::Zero(d_in, d_in);
    for (const Mat& k : kraus_) {
      require(k.rows() == d_out && k.cols() == d_in, ErrorKind::InvalidChannel,
              "Kraus operators are d_out x d_in");
      acc += k.adjoint() * k;
    }
    require((acc - Mat::Identity(d_in, d_in)).norm() <=
                Tolerance::scaled(tol, std::sqrt(double(d_in))),
            ErrorKind::InvalidChannel, "sum_k K^dagger K = I (trace preservation)");
  }

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  bool endomorphic() const { return d_in_ == d_out_; }
  const std::vector<Mat>& kraus() const { return kraus_; }

  Mat apply(const Mat& rho) const {
    require(rho.rows() == d_in_ && rho.cols() == d_in_,
            ErrorKind::DimensionMismatch, "input dim equals d_in");
    Mat out = Mat::Zero(d_out_, d_out_);
    for (const Mat& k : kraus_) out.noalias() += k * rho * k.adjoint();
    return out;
  }

 private:
  int d_in_;
  int d_out_;
  std::vector<Mat> kraus_;
};

inline QuantumChannel identity_channel(int d) {
  return QuantumChannel(d, d, {Mat::Identity(d, d)});
}

inline QuantumChannel unitary_channel(const Mat& u) {
  return QuantumChannel(int(u.cols()), int(u.rows()), {u});
}

/// Cyclic shift |n> -> |n + shift mod d>.
inline Mat cyclic_shift(int d, int shift) {
  Mat s = Mat::Zero(d, d);
  for (int n = 0; n < d; ++n) s(((n + shift) % d + d) % d, n) = 1.0;
  return s;
}

inline Vec vectorize(const Mat& k) {
  return Eigen::Map<const Vec>(k.data(), k.size());
}

inline Mat choi(const QuantumChannel& c) {
  const int n = c.d_in() * c.d_out();
  Mat j = Mat::Zero(n, n);
  for (const Mat& k : c.kraus()) {
    const Vec v = vectorize(k);
    j.noalias() += v * v.adjoint();
  }
  return j;
}

/// Kraus form of a PSD Choi matrix; eigenvalues below the relative
/// threshold are dropped.
inline QuantumChannel channel_from_choi(const Mat& j, int d_in, int d_out,
                                        double rel_tol = 1e-12) {
  require(j.rows() == d_in * d_out && j.cols() == d_in * d_out,
          ErrorKind::InvalidChannel, "Choi matrix is (d_in d_out)^2");
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(j));
  const RealVec& ev = es.eigenvalues();
  const double top = std::max(1e-300, ev.cwiseAbs().maxCoeff());
  require(ev(0) >= -1e-9 * std::max(1.0, top), ErrorKind::InvalidChannel,
          "Choi matrix PSD (complete positivity)");
  std::vector<Mat> kraus;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    if (ev(i) <= rel_tol * top) break;
    const Vec v = es.eigenvectors().col(i) * std::sqrt(ev(i));
    kraus.push_back(Eigen::Map<const Mat>(v.data(), d_out, d_in));
  }
  return QuantumChannel(d_in, d_out, std::move(kraus));
}

/// rho -> sum_k K rho K^dagger
inline QuantumState apply(const QuantumChannel& c, const QuantumState& s) {
  require(s.dim() == c.d_in(), ErrorKind::DimensionMismatch,
          "state dim equals d_in");
  return QuantumState::mixed(c.apply(s.density()), 1e-8);
}

struct CovarianceCheck {
  bool covariant = false;
  double residual = 0.0;
};

/// max_g |Choi(U_out(g) o E o U_in(g)^dagger) - Choi(E)|_F <= tol.
inline CovarianceCheck is_g_covariant(const QuantumChannel& c,
                                      const UnitaryRep& r_in,
                                      const UnitaryRep& r_out,
                                      double tol = 1e-10) {
  require_same_group(r_in.group_ptr(), r_out.group_ptr());
  require(r_in.dim() == c.d_in() && r_out.dim() == c.d_out(),
          ErrorKind::DimensionMismatch, "rep dims equal channel dims");
  const Mat j = choi(c);
  double worst = 0.0;
  for (int g = 0; g < r_in.group().order(); ++g) {
    // vec(U_out K U_in^dagger) = (conj(U_in) (x) U_out) vec(K)
    const Mat a = kron(r_in(g).conjugate(), r_out(g));
    worst = std::max(worst, (a * j * a.adjoint() - j).norm());
  }
  return {worst <= tol, worst};
}

/// Choi matrix of (1/|G|) sum_g U(g)^dagger o E o U(g).
inline Mat twirled_choi(const QuantumChannel& c, const UnitaryRep& r) {
  require(c.endomorphic(), ErrorKind::NonEndomorphic,
          "twirl needs an endomorphic channel (embed first)");
  require(r.dim() == c.d_in(), ErrorKind::DimensionMismatch,
          "rep dim equals channel dim");
  const Mat j = choi(c);
  Mat acc = Mat::Zero(j.rows(), j.cols());
  for (const Mat& u : r.mats()) {
    // vec(U^dagger K U) = (U^T (x) U^dagger) vec(K)
    const Mat a = kron(u.transpose(), u.adjoint());
    acc.noalias() += a * j * a.adjoint();
  }
  return acc / double(r.group().order());
}

inline QuantumChannel twirl_channel(const QuantumChannel& c,
                                    const UnitaryRep& r) {
  return channel_from_choi(twirled_choi(c, r), c.d_in(), c.d_out());
}

/// rho -> (1/|K|) sum_{k in K} U(k) rho U(k)^dagger
inline QuantumChannel uniform_twirl_over_subgroup(const UnitaryRep& r,
                                                  const SubgroupRef& k) {
  std::vector<Mat> kraus;
  const double w = 1.0 / std::sqrt(double(k.order()));
  for (int g : k.elements()) {
    require(g < r.group().order(), ErrorKind::InvalidSubgroup,
            "subgroup of the rep's group");
    kraus.push_back(w * r(g));
  }
  return QuantumChannel(r.dim(), r.dim(), std::move(kraus));
}

/// Endomorphic extension on H_in (+) H_out:
///   X -> E(Pi_in X Pi_in) + I/(d_in + d_out) tr(Pi_out X Pi_out),
/// with E's output placed in the H_out sector.
inline QuantumChannel embed_channel(const QuantumChannel& c,
                                    const UnitaryRep& r_in,
                                    const UnitaryRep& r_out) {
  require_same_group(r_in.group_ptr(), r_out.group_ptr());
  require(r_in.dim() == c.d_in() && r_out.dim() == c.d_out(),
          ErrorKind::DimensionMismatch, "rep dims equal channel dims");
  const int din = c.d_in(), dout = c.d_out(), d = din + dout;
  std::vector<Mat> kraus;
  for (const Mat& k : c.kraus()) {
    Mat e = Mat::Zero(d, d);
    e.block(din, 0, dout, din) = k;
    kraus.push_back(e);
  }
  const double w = 1.0 / std::sqrt(double(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < dout; ++j) {
      Mat e = Mat::Zero(d, d);
      e(i, din + j) = w;
      kraus.push_back(e);
    }
  return QuantumChannel(d, d, std::move(kraus));
}

}  // namespace asymkit
