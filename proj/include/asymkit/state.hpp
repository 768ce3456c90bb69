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

// Quantum states, characteristic functions chi(g) = tr(rho U(g)), reductions
// onto irreps F^(mu), and the group Fourier transform relating the two.

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "asymkit/rep.hpp"

namespace asymkit {

class QuantumState {
 public:
  enum class Kind { Pure, Mixed };

  static QuantumState pure(Vec psi, double tol = Tolerance::kDefault) {
    require(psi.size() >= 1, ErrorKind::InvalidState, "dim >= 1");
    require(std::abs(psi.norm() - 1.0) <= tol, ErrorKind::InvalidState,
            "|vec| = 1");
    return QuantumState(std::move(psi));
  }

  /// Normalizes first; for building states from unnormalized amplitudes.
  static QuantumState pure_normalized(const Vec& psi) {
    require(psi.norm() > 0, ErrorKind::InvalidState, "|vec| > 0");
    return QuantumState(Vec(psi / psi.norm()));
  }

  static QuantumState mixed(Mat rho, double tol = Tolerance::kDefault) {
    require(rho.rows() >= 1 && rho.rows() == rho.cols(),
            ErrorKind::InvalidState, "rho is d x d with d >= 1");
    const double scale = Tolerance::scaled(tol, rho.norm());
    require(hermiticity_residual(rho) <= scale, ErrorKind::InvalidState,
            "rho Hermitian");
    require(std::abs(rho.trace() - cplx(1.0)) <= scale,
            ErrorKind::InvalidState, "tr rho = 1");
    require(min_eigenvalue(rho) >= -scale, ErrorKind::InvalidState,
            "rho PSD (min eigenvalue >= -tol)");
    return QuantumState(std::move(rho));
  }

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::Pure; }
  int dim() const { return dim_; }

  const Vec& vec() const {
    require(is_pure(), ErrorKind::PureOnly, "state must be pure");
    return std::get<Vec>(data_);
  }
  const Mat& rho() const {
    require(!is_pure(), ErrorKind::InvalidState, "state must be mixed");
    return std::get<Mat>(data_);
  }

  Mat density() const {
    if (is_pure()) {
      const Vec& v = std::get<Vec>(data_);
      return v * v.adjoint();
    }
    return std::get<Mat>(data_);
  }

 private:
  explicit QuantumState(Vec v)
      : kind_(Kind::Pure), dim_(static_cast<int>(v.size())), data_(std::move(v)) {}
  explicit QuantumState(Mat m)
      : kind_(Kind::Mixed), dim_(static_cast<int>(m.rows())), data_(std::move(m)) {}

  Kind kind_;
  int dim_;
  std::variant<Vec, Mat> data_;
};

inline void require_pure(const QuantumState& s) {
  require(s.is_pure(), ErrorKind::PureOnly,
          "equivalence deciders accept pure states only (reductions do not "
          "decide mixed-state equivalence)");
}

/// V s V^dagger (or V psi).
inline QuantumState transform(const QuantumState& s, const Mat& v) {
  require(v.rows() == s.dim() && v.cols() == s.dim(),
          ErrorKind::DimensionMismatch, "unitary dimension equals state dim");
  if (s.is_pure()) return QuantumState::pure_normalized(v * s.vec());
  return QuantumState::mixed(v * s.rho() * v.adjoint(), 1e-8);
}

struct CharFunction {
  GroupPtr group;
  ElementFunction values;

  cplx operator[](int g) const { return values[g]; }
  cplx& operator[](int g) { return values[g]; }
  int size() const { return static_cast<int>(values.size()); }
};

/// F^(mu) per irrep block label; label mu indexes the decomposition's blocks.
struct IrrepReduction {
  std::vector<Mat> blocks;

  double total_trace() const {
    double t = 0.0;
    for (const Mat& f : blocks) t += f.trace().real();
    return t;
  }
};

/// Each F^(mu) Hermitian PSD and sum_mu tr F^(mu) = 1, within tol.
inline bool is_state_reduction(const IrrepReduction& red,
                               double tol = Tolerance::kDefault) {
  for (const Mat& f : red.blocks)
    if (!is_psd(f, tol)) return false;
  return std::abs(red.total_trace() - 1.0) <= tol;
}

/// chi(e) = 1 and |chi(g)| <= 1 within tol.
inline bool is_state_charfunc(const CharFunction& f,
                              double tol = Tolerance::kDefault) {
  if (std::abs(f[0] - cplx(1.0)) > tol) return false;
  for (cplx v : f.values)
    if (std::abs(v) > 1.0 + tol) return false;
  return true;
}

inline CharFunction charfunc(const QuantumState& s, const UnitaryRep& r) {
  require(s.dim() == r.dim(), ErrorKind::DimensionMismatch,
          "state dim equals rep dim");
  CharFunction f{r.group_ptr(), ElementFunction(r.group().order())};
  if (s.is_pure()) {
    const Vec& psi = s.vec();
    for (int g = 0; g < r.group().order(); ++g) f.values[g] = psi.dot(r(g) * psi);
  } else {
    const Mat& rho = s.rho();
    for (int g = 0; g < r.group().order(); ++g)
      f.values[g] = rho.cwiseProduct(r(g).transpose()).sum();
  }
  return f;
}

/// F^(mu) = tr_{N_mu}(Pi_mu rho Pi_mu) in the decomposition basis.
inline IrrepReduction reduction_onto_irreps(const QuantumState& s,
                                            const IrrepDecomposition& dec) {
  require(s.dim() == dec.dim(), ErrorKind::DimensionMismatch,
          "state dim equals decomposition dim");
  IrrepReduction red;
  if (s.is_pure()) {
    for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
      const Mat a = dec.sector_matrix(s.vec(), int(mu));
      red.blocks.push_back(a * a.adjoint());
    }
    return red;
  }
  const Mat rho = dec.basis * s.rho() * dec.basis.adjoint();
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const IrrepBlock& b = dec.blocks[mu];
    const int o = dec.offsets[mu];
    Mat f = Mat::Zero(b.dim, b.dim);
    for (int a = 0; a < b.dim; ++a)
      for (int c = 0; c < b.dim; ++c)
        for (int j = 0; j < b.mult; ++j)
          f(a, c) += rho(o + a * b.mult + j, o + c * b.mult + j);
    red.blocks.push_back(f);
  }
  return red;
}

/// chi(g) = sum_mu tr(F^(mu) U_mu(g)).
inline CharFunction charfunc_from_reduction(const IrrepReduction& red,
                                            const IrrepDecomposition& dec) {
  require(red.blocks.size() == dec.blocks.size(), ErrorKind::LabelMismatch,
          "reduction labels match decomposition blocks");
  const int order = dec.group->order();
  CharFunction f{dec.group, ElementFunction(order, cplx(0.0))};
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const IrrepBlock& b = dec.blocks[mu];
    require(red.blocks[mu].rows() == b.dim && red.blocks[mu].cols() == b.dim,
            ErrorKind::LabelMismatch, "F^(mu) is d_mu x d_mu");
    for (int g = 0; g < order; ++g)
      f.values[g] += red.blocks[mu].cwiseProduct(b.mats[g].transpose()).sum();
  }
  return f;
}

/// F^(mu) = d_mu (1/|G|) sum_g f(g^-1) U_mu(g).
inline IrrepReduction fourier_inverse(const CharFunction& f,
                                      const IrrepDecomposition& dec) {
  require_same_group(f.group, dec.group);
  const GroupTable& g = *dec.group;
  require(f.size() == g.order(), ErrorKind::InvalidParameter,
          "one value per group element");
  IrrepReduction red;
  for (const IrrepBlock& b : dec.blocks) {
    Mat acc = Mat::Zero(b.dim, b.dim);
    for (int x = 0; x < g.order(); ++x) acc += f[g.inv(x)] * b.mats[x];
    red.blocks.push_back(acc * (double(b.dim) / g.order()));
  }
  return red;
}

/// (f1 * f2)(g) = (1/|G|) sum_h f1(g h^-1) f2(h).
inline CharFunction convolve(const CharFunction& f1, const CharFunction& f2) {
  require_same_group(f1.group, f2.group);
  const GroupTable& g = *f1.group;
  CharFunction out{f1.group, ElementFunction(g.order(), cplx(0.0))};
  for (int x = 0; x < g.order(); ++x) {
    cplx acc = 0.0;
    for (int h = 0; h < g.order(); ++h) acc += f1[g.mul(x, g.inv(h))] * f2[h];
    out.values[x] = acc / double(g.order());
  }
  return out;
}

inline QuantumState tensor_state(const QuantumState& s1, const QuantumState& s2) {
  if (s1.is_pure() && s2.is_pure()) {
    const Mat k = kron(s1.vec(), s2.vec());
    return QuantumState::pure_normalized(k.col(0));
  }
  return QuantumState::mixed(kron(s1.density(), s2.density()), 1e-8);
}

/// { g : |U(g) rho U(g)^dagger - rho|_F <= tol }. Throws tolerance error
/// when the set found is not closed (tol misconfigured for the input).
inline SubgroupRef symmetry_subgroup(const QuantumState& s, const UnitaryRep& r,
                                     double tol = Tolerance::kDefault) {
  require(s.dim() == r.dim(), ErrorKind::DimensionMismatch,
          "state dim equals rep dim");
  const Mat rho = s.density();
  std::vector<int> elems;
  for (int g = 0; g < r.group().order(); ++g)
    if ((r(g) * rho * r(g).adjoint() - rho).norm() <= tol) elems.push_back(g);
  try {
    return SubgroupRef(r.group(), std::move(elems));
  } catch (const Error& e) {
    fail(ErrorKind::Tolerance,
         std::string("symmetry set not closed under mul and inv at this "
                     "tolerance (") + e.what() + ")");
  }
}

// ---------------------------------------------------------------------------
// U(1) weight model

/// Distribution p(n) over integer weights.
class WeightState {
 public:
  explicit WeightState(std::map<int, double> p, double tol = Tolerance::kDefault)
      : p_(std::move(p)) {
    double total = 0.0;
    for (auto [n, pn] : p_) {
      require(pn >= -tol, ErrorKind::InvalidState, "p(n) >= 0");
      total += pn;
    }
    require(std::abs(total - 1.0) <= tol, ErrorKind::InvalidState,
            "sum_n p(n) = 1");
  }

  const std::map<int, double>& distribution() const { return p_; }
  double operator()(int n) const {
    auto it = p_.find(n);
    return it == p_.end() ? 0.0 : it->second;
  }

 private:
  std::map<int, double> p_;
};

/// p(n) = <psi|Pi_n|psi> for basis vectors carrying the given weights.
inline WeightState weight_distribution(const QuantumState& s,
                                       const std::vector<int>& weights) {
  require(static_cast<int>(weights.size()) == s.dim(),
          ErrorKind::DimensionMismatch, "one weight per basis vector");
  const Mat rho = s.density();
  std::map<int, double> p;
  for (int j = 0; j < s.dim(); ++j) {
    const double pj = rho(j, j).real();
    if (pj > 0.0) p[weights[j]] += pj;
  }
  return WeightState(std::move(p), 1e-8);
}

/// Distribution of the total weight of a product state.
inline WeightState tensor_weights(const WeightState& a, const WeightState& b) {
  std::map<int, double> p;
  for (auto [n, pn] : a.distribution())
    for (auto [m, pm] : b.distribution()) p[n + m] += pn * pm;
  return WeightState(std::move(p), 1e-8);
}

/// sum_n p(n) n^k
inline double u1_moments(const WeightState& w, int k) {
  require(k >= 0 && k <= 8, ErrorKind::InvalidParameter, "0 <= k <= 8");
  double m = 0.0;
  for (auto [n, pn] : w.distribution()) m += pn * std::pow(double(n), k);
  return m;
}

/// k-th cumulant from the moment recursion
/// kappa_k = m_k - sum_{j=1}^{k-1} C(k-1, j-1) kappa_j m_{k-j}.
inline double u1_cumulant(const WeightState& w, int k) {
  require(k >= 1 && k <= 8, ErrorKind::InvalidParameter, "1 <= k <= 8");
  std::vector<double> m(k + 1), kappa(k + 1);
  for (int i = 0; i <= k; ++i) m[i] = u1_moments(w, i);
  auto binom = [](int n, int r) {
    double c = 1.0;
    for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
  };
  for (int i = 1; i <= k; ++i) {
    double acc = m[i];
    for (int j = 1; j < i; ++j) acc -= binom(i - 1, j - 1) * kappa[j] * m[i - j];
    kappa[i] = acc;
  }
  return kappa[k];
}

}  // namespace asymkit
