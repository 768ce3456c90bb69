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

// Exact interconversion of pure states under symmetry constraints.
//
// Two pure states are related by an invariant unitary iff their reductions
// onto irreps agree (equivalently their characteristic functions agree); they
// are related by covariant channels iff their characteristic functions agree
// up to a one-dimensional rep. Every positive answer carries a witness.

#include <optional>
#include <vector>

#include "asymkit/channel.hpp"

namespace asymkit {

enum class EquivalenceStatus { Equivalent, NotEquivalent, Inconclusive };

inline std::string_view to_string(EquivalenceStatus s) {
  switch (s) {
    case EquivalenceStatus::Equivalent: return "Equivalent";
    case EquivalenceStatus::NotEquivalent: return "NotEquivalent";
    case EquivalenceStatus::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

struct EquivalenceVerdict {
  EquivalenceStatus status = EquivalenceStatus::Inconclusive;
  std::optional<Mat> witness;
  /// For G-equivalence: omega with chi_phi(g) = omega(g) chi_psi(g).
  std::optional<ElementFunction> one_dim_rep;
  /// Element where |chi_psi| and |chi_phi| differ, so no omega can match.
  std::optional<int> certificate;
  /// Largest per-irrep trace distance of the reductions (unitary decider).
  double reduction_distance = 0.0;

  bool equivalent() const { return status == EquivalenceStatus::Equivalent; }
};

/// X[i][j] = <psi_i|psi_j>
inline Mat gram(const std::vector<QuantumState>& states) {
  const int n = static_cast<int>(states.size());
  Mat x(n, n);
  for (const QuantumState& s : states) require_pure(s);
  for (int i = 0; i < n; ++i) {
    require(states[i].dim() == states[0].dim(), ErrorKind::DimensionMismatch,
            "all states share one dimension");
    for (int j = 0; j < n; ++j) x(i, j) = states[i].vec().dot(states[j].vec());
  }
  return x;
}

/// Unitary V with V psi_i = phi_i for all i, present iff the Gram matrices
/// agree within tol.
inline std::optional<Mat> unitary_set_interconversion(
    const std::vector<QuantumState>& a, const std::vector<QuantumState>& b,
    double tol = Tolerance::kDefault) {
  require(a.size() == b.size() && !a.empty(), ErrorKind::InvalidParameter,
          "two non-empty sets of equal size");
  const Mat ga = gram(a), gb = gram(b);
  require(a[0].dim() == b[0].dim(), ErrorKind::DimensionMismatch,
          "both sets share one dimension");
  if ((ga - gb).norm() > Tolerance::scaled(tol, ga.norm())) return std::nullopt;

  const int d = a[0].dim();
  const int m = static_cast<int>(a.size());
  Mat am(d, m), bm(d, m);
  for (int i = 0; i < m; ++i) {
    am.col(i) = a[i].vec();
    bm.col(i) = b[i].vec();
  }
  Eigen::JacobiSVD<Mat> svd(am, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVec& sv = svd.singularValues();
  int rank = 0;
  while (rank < sv.size() && sv(rank) > 1e-10 * std::max(1.0, sv(0))) ++rank;
  // range(A) -> range(B): B v_k / s_k is orthonormal because A^dag A = B^dag B
  const Mat qa = svd.matrixU().leftCols(rank);
  Mat qb = bm * svd.matrixV().leftCols(rank);
  for (int k = 0; k < rank; ++k) qb.col(k) /= sv(k);
  // qb qa^dag is a partial isometry; its polar factor completes it on the
  // orthogonal complements
  return polar_unitary(qb * qa.adjoint());
}

namespace detail {

/// Y unitary maximizing Re tr(B^dag A Y); then tr(B^dag A Y) = |B^dag A|_1.
inline Mat alignment_unitary(const Mat& a, const Mat& b) {
  const Mat c = b.adjoint() * a;
  Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV() * svd.matrixU().adjoint();
}

inline double reduction_distance(const Mat& a, const Mat& b) {
  return trace_norm_hermitian(a * a.adjoint() - b * b.adjoint());
}

}  // namespace detail

/// Invariant unitary equivalence from equality of reductions onto irreps.
inline EquivalenceVerdict decide_unitary_g_equivalence(
    const QuantumState& psi, const QuantumState& phi,
    const IrrepDecomposition& dec, double tol = 1e-8) {
  require_pure(psi);
  require_pure(phi);
  require(psi.dim() == dec.dim() && phi.dim() == dec.dim(),
          ErrorKind::DimensionMismatch, "state dims equal decomposition dim");
  EquivalenceVerdict v;
  std::vector<Mat> sector_unitaries;
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const Mat a = dec.sector_matrix(psi.vec(), int(mu));
    const Mat b = dec.sector_matrix(phi.vec(), int(mu));
    v.reduction_distance =
        std::max(v.reduction_distance, detail::reduction_distance(a, b));
    // B = A V_N^T, with V_N acting on the multiplicity index
    sector_unitaries.push_back(detail::alignment_unitary(a, b).transpose());
  }
  if (v.reduction_distance > tol) {
    v.status = EquivalenceStatus::NotEquivalent;
    return v;
  }
  Mat w = invariant_unitary(dec, sector_unitaries);
  // fix the global phase on the largest component of V psi
  const Vec out = w * psi.vec();
  Eigen::Index k = 0;
  out.cwiseAbs().maxCoeff(&k);
  const cplx rel = phi.vec()(k) * std::conj(out(k));
  if (std::abs(rel) > 0) w *= rel / std::abs(rel);
  v.status = EquivalenceStatus::Equivalent;
  v.witness = std::move(w);
  return v;
}

namespace detail {

inline constexpr double kChiMatchTol = 1e-8;
inline constexpr double kChiZeroTol = 1e-6;

/// chi_phi(g) = omega(g) chi_psi(g) element-wise; elements where either
/// function is below kChiZeroTol must be below it in both.
inline bool chi_matches(const CharFunction& psi, const CharFunction& phi,
                        const ElementFunction& omega) {
  for (int g = 0; g < psi.size(); ++g) {
    const bool zp = std::abs(psi[g]) <= kChiZeroTol;
    const bool zf = std::abs(phi[g]) <= kChiZeroTol;
    if (zp || zf) {
      if (zp != zf) return false;
      continue;
    }
    if (std::abs(phi[g] - omega[g] * psi[g]) > kChiMatchTol) return false;
  }
  return true;
}

}  // namespace detail

/// Covariant-channel equivalence of pure states on a finite group. The
/// necessity direction is only established when neither characteristic
/// function vanishes; otherwise a non-match is Inconclusive.
inline EquivalenceVerdict decide_g_equivalence(
    const QuantumState& psi, const QuantumState& phi, const UnitaryRep& r,
    const std::vector<ElementFunction>& one_dim) {
  require_pure(psi);
  require_pure(phi);
  const CharFunction cp = charfunc(psi, r);
  const CharFunction cf = charfunc(phi, r);
  EquivalenceVerdict v;
  for (const ElementFunction& omega : one_dim) {
    require(static_cast<int>(omega.size()) == r.group().order(),
            ErrorKind::InvalidParameter, "1-d reps defined on every element");
    if (detail::chi_matches(cp, cf, omega)) {
      v.status = EquivalenceStatus::Equivalent;
      v.one_dim_rep = omega;
      return v;
    }
  }
  bool vanishes = false;
  for (int g = 0; g < cp.size(); ++g) {
    if (std::abs(cp[g]) <= detail::kChiZeroTol ||
        std::abs(cf[g]) <= detail::kChiZeroTol)
      vanishes = true;
    if (!v.certificate &&
        std::abs(std::abs(cp[g]) - std::abs(cf[g])) > detail::kChiMatchTol)
      v.certificate = g;
  }
  v.status = vanishes ? EquivalenceStatus::Inconclusive
                      : EquivalenceStatus::NotEquivalent;
  return v;
}

inline EquivalenceVerdict decide_g_equivalence(const QuantumState& psi,
                                               const QuantumState& phi,
                                               const UnitaryRep& r,
                                               std::uint64_t seed = 0) {
  return decide_g_equivalence(psi, phi, r, one_dim_reps(r.group_ptr(), seed));
}

/// Delta with p_psi(n) = p_phi(n + Delta) for all n, if one exists.
inline std::optional<int> u1_shift_equivalence(const WeightState& psi,
                                               const WeightState& phi,
                                               double tol = Tolerance::kDefault) {
  auto support_min = [tol](const WeightState& w) -> std::optional<int> {
    for (auto [n, p] : w.distribution())
      if (p > tol) return n;
    return std::nullopt;
  };
  const auto a = support_min(psi), b = support_min(phi);
  if (!a || !b) return std::nullopt;
  const int delta = *b - *a;
  for (auto [n, p] : psi.distribution())
    if (std::abs(p - phi(n + delta)) > tol) return std::nullopt;
  for (auto [n, p] : phi.distribution())
    if (std::abs(p - psi(n - delta)) > tol) return std::nullopt;
  return delta;
}

/// (1/|G|) sum_g U(g)^dagger o E o U(g).
inline QuantumChannel covariant_map_from_plain_map(const QuantumChannel& e,
                                                   const UnitaryRep& r) {
  return twirl_channel(e, r);
}

/// Invariant unitary V with V Pi = W Pi, given that W Pi is a partial
/// isometry with initial projector Pi commuting with the rep. The completion
/// acts blockwise on the multiplicity spaces.
inline Mat extend_isometry_to_ginv_unitary(const Mat& w, const Mat& proj,
                                           const UnitaryRep& r,
                                           const IrrepDecomposition& dec,
                                           double tol = 1e-8) {
  const int d = r.dim();
  require(w.rows() == d && w.cols() == d && proj.rows() == d && proj.cols() == d,
          ErrorKind::DimensionMismatch, "W and Pi are dim x dim");
  const Mat wp = w * proj;
  require((wp.adjoint() * wp - proj).norm() <= tol, ErrorKind::NotInvariantIsometry,
          "Pi W^dagger W Pi = Pi");
  require(commutator_residual(r, wp) <= tol, ErrorKind::NotInvariantIsometry,
          "[W Pi, U(g)] = 0 for all g");
  const Mat local = dec.basis * wp * dec.basis.adjoint();
  std::vector<Mat> sector_unitaries;
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const int n = dec.blocks[mu].mult;
    // W Pi = I_d (x) X_mu on the sector; read X_mu off the a = 0 rows
    const Mat x = local.block(dec.offsets[mu], dec.offsets[mu], n, n);
    sector_unitaries.push_back(polar_unitary(x));
  }
  Mat v = invariant_unitary(dec, sector_unitaries);
  require((v * proj - wp).norm() <= 10 * tol, ErrorKind::NotInvariantIsometry,
          "W Pi is block diagonal on the multiplicity spaces");
  return v;
}

inline Mat extend_isometry_to_ginv_unitary(const Mat& w, const Mat& proj,
                                           const UnitaryRep& r,
                                           std::uint64_t seed = 0) {
  return extend_isometry_to_ginv_unitary(w, proj, r, decompose(r, seed));
}

}  // namespace asymkit
