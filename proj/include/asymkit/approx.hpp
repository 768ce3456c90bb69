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

// Approximate interconversion by invariant unitaries: the best achievable
// overlap max_V |<psi2|V|psi1>| = sum_mu Fid(F1^(mu), F2^(mu)), an explicit
// maximizer, and cheaper lower bounds from trace distances and
// characteristic functions.

#include <vector>

#include "asymkit/equivalence.hpp"

namespace asymkit {

/// Fid(A, B) = |sqrt(A) sqrt(B)|_1 for PSD A, B.
inline double fidelity(const Mat& a, const Mat& b,
                       double tol = Tolerance::kDefault) {
  require(a.rows() == b.rows() && a.cols() == b.cols() && a.rows() == a.cols(),
          ErrorKind::DimensionMismatch, "fidelity needs equal square shapes");
  return trace_norm(sqrt_psd(a, tol) * sqrt_psd(b, tol));
}

/// |A1 - A2|_1 >= tr A1 + tr A2 - 2 Fid(A1, A2) for PSD A1, A2.
inline bool trace_distance_fidelity_check(const Mat& a, const Mat& b,
                                          double tol = 1e-10) {
  const double lhs = trace_norm_hermitian(a - b);
  const double rhs =
      a.trace().real() + b.trace().real() - 2.0 * fidelity(a, b);
  return lhs >= rhs - tol;
}

struct OverlapReport {
  double optimal = 0.0;
  std::vector<double> per_mu_fidelity;
  Mat witness;
  double bound_trace = 0.0;
  double bound_charfunc_global = 0.0;
  double bound_charfunc_per_mu = 0.0;
};

/// Irrep character phi_mu(g) = tr U_mu(g) per element.
inline CharFunction irrep_character(const IrrepDecomposition& dec, int mu) {
  CharFunction f{dec.group, ElementFunction(dec.group->order())};
  for (int g = 0; g < dec.group->order(); ++g)
    f.values[g] = dec.blocks[mu].trace(g);
  return f;
}

/// mu-component chi^(mu) = d_mu (phi_mu * chi) = tr(U_mu(g) F^(mu)).
inline CharFunction charfunc_component(const CharFunction& chi,
                                       const IrrepDecomposition& dec, int mu) {
  CharFunction c = convolve(irrep_character(dec, mu), chi);
  for (cplx& v : c.values) v *= double(dec.blocks[mu].dim);
  return c;
}

namespace detail {

inline void require_pure_pair(const QuantumState& a, const QuantumState& b,
                              const IrrepDecomposition& dec) {
  require_pure(a);
  require_pure(b);
  require(a.dim() == dec.dim() && b.dim() == dec.dim(),
          ErrorKind::DimensionMismatch, "state dims equal decomposition dim");
}

inline constexpr double kSupportTol = 1e-12;

}  // namespace detail

/// 1 - (1/2) sum_mu |F1^(mu) - F2^(mu)|_1
inline double bound_from_trace_distance(const QuantumState& psi1,
                                        const QuantumState& psi2,
                                        const IrrepDecomposition& dec) {
  detail::require_pure_pair(psi1, psi2, dec);
  const IrrepReduction f1 = reduction_onto_irreps(psi1, dec);
  const IrrepReduction f2 = reduction_onto_irreps(psi2, dec);
  double sum = 0.0;
  for (std::size_t mu = 0; mu < f1.blocks.size(); ++mu)
    sum += trace_norm_hermitian(f1.blocks[mu] - f2.blocks[mu]);
  return 1.0 - 0.5 * sum;
}

struct CharfuncBounds {
  double global = 0.0;
  double per_mu = 0.0;
};

/// Lower bounds from characteristic functions, summing over the irreps where
/// either state has a nonzero component:
///   global: 1 - (1/2)(sum_mu d_mu^2) avg_g |chi1 - chi2|
///   per_mu: 1 - (1/2) sum_mu d_mu^2 avg_g |chi1^(mu) - chi2^(mu)|
inline CharfuncBounds bound_from_charfunc(const QuantumState& psi1,
                                          const QuantumState& psi2,
                                          const IrrepDecomposition& dec) {
  detail::require_pure_pair(psi1, psi2, dec);
  const IrrepReduction f1 = reduction_onto_irreps(psi1, dec);
  const IrrepReduction f2 = reduction_onto_irreps(psi2, dec);
  const CharFunction chi1 = charfunc_from_reduction(f1, dec);
  const CharFunction chi2 = charfunc_from_reduction(f2, dec);
  const int order = dec.group->order();

  double dim_sum = 0.0, per_mu_sum = 0.0;
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    if (f1.blocks[mu].trace().real() <= detail::kSupportTol &&
        f2.blocks[mu].trace().real() <= detail::kSupportTol)
      continue;
    const double d2 = double(dec.blocks[mu].dim) * dec.blocks[mu].dim;
    dim_sum += d2;
    const CharFunction c1 = charfunc_component(chi1, dec, int(mu));
    const CharFunction c2 = charfunc_component(chi2, dec, int(mu));
    double avg = 0.0;
    for (int g = 0; g < order; ++g) avg += std::abs(c1[g] - c2[g]);
    per_mu_sum += d2 * avg / order;
  }
  double avg = 0.0;
  for (int g = 0; g < order; ++g) avg += std::abs(chi1[g] - chi2[g]);
  avg /= order;
  return {1.0 - 0.5 * dim_sum * avg, 1.0 - 0.5 * per_mu_sum};
}

/// Optimal overlap with an achieving invariant unitary: per-irrep
/// Uhlmann-optimal multiplicity-space unitaries, each sector overlap rotated
/// to be real and nonnegative.
inline OverlapReport max_overlap(const QuantumState& psi1,
                                 const QuantumState& psi2,
                                 const IrrepDecomposition& dec) {
  detail::require_pure_pair(psi1, psi2, dec);
  OverlapReport rep;
  std::vector<Mat> sector_unitaries;
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const Mat a = dec.sector_matrix(psi1.vec(), int(mu));
    const Mat b = dec.sector_matrix(psi2.vec(), int(mu));
    const double fid = fidelity(a * a.adjoint(), b * b.adjoint());
    rep.per_mu_fidelity.push_back(fid);
    rep.optimal += fid;
    Mat y = detail::alignment_unitary(a, b);
    const cplx overlap = (b.adjoint() * a * y).trace();
    if (std::abs(overlap) > 0) y *= std::conj(overlap) / std::abs(overlap);
    sector_unitaries.push_back(y.transpose());
  }
  rep.witness = invariant_unitary(dec, sector_unitaries);
  rep.bound_trace = bound_from_trace_distance(psi1, psi2, dec);
  const CharfuncBounds cb = bound_from_charfunc(psi1, psi2, dec);
  rep.bound_charfunc_global = cb.global;
  rep.bound_charfunc_per_mu = cb.per_mu;
  return rep;
}

}  // namespace asymkit
