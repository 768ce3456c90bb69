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

// Unitary representations of finite groups and their decomposition into
// irreducible blocks,
//
//   W U(g) W^dagger = (+)_mu  U_mu(g) (x) I_{n_mu},
//
// where sector mu occupies indices offsets[mu] + a * n_mu + j of the new
// basis (a indexes the irrep space, j the multiplicity space).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asymkit/group.hpp"
#include "asymkit/linalg.hpp"

namespace asymkit {

/// Complex value per group element.
using ElementFunction = std::vector<cplx>;

class UnitaryRep {
 public:
  /// Validates identity, unitarity and the homomorphism property (all pairs
  /// for |G| <= 64, 10|G| seeded random pairs above).
  UnitaryRep(GroupPtr group, std::vector<Mat> mats,
             double tol = Tolerance::kDefault)
      : group_(std::move(group)), mats_(std::move(mats)) {
    require(group_ != nullptr, ErrorKind::InvalidRep, "rep needs a group");
    require(static_cast<int>(mats_.size()) == group_->order(),
            ErrorKind::InvalidRep, "one matrix per group element");
    dim_ = static_cast<int>(mats_[0].rows());
    require(dim_ >= 1, ErrorKind::InvalidRep, "dim >= 1");
    for (const Mat& m : mats_)
      require(m.rows() == dim_ && m.cols() == dim_, ErrorKind::InvalidRep,
              "every matrix is dim x dim");
    validate(tol);
  }

  const GroupPtr& group_ptr() const { return group_; }
  const GroupTable& group() const { return *group_; }
  int dim() const { return dim_; }
  const Mat& operator()(int g) const { return mats_[g]; }
  const std::vector<Mat>& mats() const { return mats_; }

  ElementFunction character() const {
    ElementFunction chi(mats_.size());
    for (std::size_t g = 0; g < mats_.size(); ++g) chi[g] = mats_[g].trace();
    return chi;
  }

 private:
  void validate(double tol) const {
    const double scale = Tolerance::scaled(tol, std::sqrt(double(dim_)));
    const Mat id = Mat::Identity(dim_, dim_);
    require((mats_[0] - id).norm() <= scale, ErrorKind::InvalidRep,
            "mats[0] = identity");
    for (const Mat& m : mats_)
      require(unitarity_residual(m) <= scale, ErrorKind::InvalidRep,
              "|mats[g] mats[g]^dagger - I| <= tol");
    const GroupTable& g = *group_;
    const int n = g.order();
    auto check = [&](int a, int b) {
      require((mats_[a] * mats_[b] - mats_[g.mul(a, b)]).norm() <= scale,
              ErrorKind::InvalidRep,
              "|mats[a] mats[b] - mats[mul[a][b]]| <= tol");
    };
    if (n <= GroupTable::kExhaustiveAssociativityOrder) {
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) check(a, b);
    } else {
      Rng rng(0x5eed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int s = 0; s < 10 * n; ++s) check(pick(rng), pick(rng));
    }
  }

  GroupPtr group_;
  std::vector<Mat> mats_;
  int dim_ = 0;
};

inline void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  require(a == b || (a->table() == b->table()), ErrorKind::GroupMismatch,
          "operands must share the same group");
}

// ---------------------------------------------------------------------------
// constructions

/// Left-regular representation: mats[g] |h> = |gh>.
inline UnitaryRep regular_rep(const GroupPtr& group) {
  const int n = group->order();
  std::vector<Mat> mats(n, Mat::Zero(n, n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) mats[g](group->mul(g, h), h) = 1.0;
  return UnitaryRep(group, std::move(mats));
}

/// Representation of Z_N (group of order N, element k) acting diagonally by
/// the phases exp(2 pi i k w / N) on basis vectors carrying weights w; the
/// finite-sample model of a number operator.
inline UnitaryRep weight_rep(const GroupPtr& cyclic,
                             const std::vector<int>& weights) {
  const int n = cyclic->order();
  require(!weights.empty(), ErrorKind::InvalidParameter,
          "weight rep needs at least one weight");
  for (int a = 0; a < n; ++a)
    require(cyclic->mul(1 % n, a) == (a + 1) % n, ErrorKind::InvalidParameter,
            "weight reps need the cyclic group Z_N with mul[a][b]=(a+b) mod N");
  const int d = static_cast<int>(weights.size());
  std::vector<Mat> mats(n, Mat::Zero(d, d));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < d; ++j) {
      const long w = ((static_cast<long>(k) * weights[j]) % n + n) % n;
      mats[k](j, j) = phase(2.0 * kPi * double(w) / n);
    }
  return UnitaryRep(cyclic, std::move(mats));
}

/// Number rep on Z_N with weights 0..dim-1.
inline UnitaryRep number_rep(const GroupPtr& cyclic, int dim) {
  std::vector<int> w(dim);
  for (int i = 0; i < dim; ++i) w[i] = i;
  return weight_rep(cyclic, w);
}

/// One-dimensional rep from unit-modulus values.
inline UnitaryRep one_dim_rep(const GroupPtr& group,
                              const ElementFunction& values) {
  std::vector<Mat> mats;
  for (cplx v : values) mats.push_back(Mat::Constant(1, 1, v));
  return UnitaryRep(group, std::move(mats));
}

inline UnitaryRep trivial_rep(const GroupPtr& group, int dim = 1) {
  return UnitaryRep(group,
                    std::vector<Mat>(group->order(), Mat::Identity(dim, dim)));
}

inline UnitaryRep tensor_rep(const UnitaryRep& a, const UnitaryRep& b) {
  require_same_group(a.group_ptr(), b.group_ptr());
  std::vector<Mat> mats;
  mats.reserve(a.mats().size());
  for (int g = 0; g < a.group().order(); ++g) mats.push_back(kron(a(g), b(g)));
  return UnitaryRep(a.group_ptr(), std::move(mats));
}

inline UnitaryRep direct_sum_rep(const UnitaryRep& a, const UnitaryRep& b) {
  require_same_group(a.group_ptr(), b.group_ptr());
  std::vector<Mat> mats;
  mats.reserve(a.mats().size());
  for (int g = 0; g < a.group().order(); ++g)
    mats.push_back(direct_sum(a(g), b(g)));
  return UnitaryRep(a.group_ptr(), std::move(mats));
}

/// Conjugated rep g -> basis * U(g) * basis^dagger.
inline UnitaryRep conjugate_rep(const UnitaryRep& r, const Mat& basis) {
  require(basis.rows() == r.dim() && basis.cols() == r.dim(),
          ErrorKind::DimensionMismatch, "basis is dim x dim");
  std::vector<Mat> mats;
  for (const Mat& m : r.mats()) mats.push_back(basis * m * basis.adjoint());
  return UnitaryRep(r.group_ptr(), std::move(mats));
}

/// (1/|G|) sum_g U(g) x U(g)^dagger.
inline Mat twirl_operator(const UnitaryRep& r, const Mat& x) {
  require(x.rows() == r.dim() && x.cols() == r.dim(),
          ErrorKind::DimensionMismatch, "operator dimension equals rep dim");
  Mat acc = Mat::Zero(r.dim(), r.dim());
  for (const Mat& u : r.mats()) acc.noalias() += u * x * u.adjoint();
  return acc / double(r.group().order());
}

inline double commutator_residual(const UnitaryRep& r, const Mat& x) {
  double worst = 0.0;
  for (const Mat& u : r.mats()) worst = std::max(worst, (u * x - x * u).norm());
  return worst;
}

// ---------------------------------------------------------------------------
// decomposition

struct IrrepBlock {
  int label = 0;
  int dim = 0;
  int mult = 0;
  std::vector<Mat> mats;           // per element, dim x dim
  std::vector<cplx> character;     // per conjugacy class

  cplx trace(int g) const { return mats[g].trace(); }
};

struct IrrepDecomposition {
  GroupPtr group;
  Mat basis;                       // W
  std::vector<IrrepBlock> blocks;
  std::vector<int> offsets;

  int dim() const { return static_cast<int>(basis.rows()); }
  int sector_size(int mu) const { return blocks[mu].dim * blocks[mu].mult; }

  /// (+)_mu U_mu(g) (x) I_{n_mu}
  Mat block_matrix(int g) const {
    Mat out = Mat::Zero(dim(), dim());
    for (std::size_t mu = 0; mu < blocks.size(); ++mu) {
      const IrrepBlock& b = blocks[mu];
      out.block(offsets[mu], offsets[mu], sector_size(int(mu)),
                sector_size(int(mu))) =
          kron(b.mats[g], Mat::Identity(b.mult, b.mult));
    }
    return out;
  }

  /// Orthogonal projector onto the mu-sector, in the original basis.
  Mat projector(int mu) const {
    const int s = sector_size(mu);
    const Mat rows = basis.middleRows(offsets[mu], s);
    return rows.adjoint() * rows;
  }

  /// Sector of a vector given in the original basis, reshaped to
  /// d_mu x n_mu.
  Mat sector_matrix(const Vec& psi, int mu) const {
    const Vec v = basis * psi;
    const IrrepBlock& b = blocks[mu];
    Mat a(b.dim, b.mult);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.mult; ++j) a(i, j) = v(offsets[mu] + i * b.mult + j);
    return a;
  }

  std::vector<std::pair<int, int>> dims_and_mults() const {
    std::vector<std::pair<int, int>> out;
    for (const IrrepBlock& b : blocks) out.emplace_back(b.dim, b.mult);
    return out;
  }
};

/// max_g |W U(g) W^dagger - blocks(g)|_F
inline double reconstruction_residual(const UnitaryRep& r,
                                      const IrrepDecomposition& dec) {
  double worst = 0.0;
  for (int g = 0; g < r.group().order(); ++g)
    worst = std::max(worst, (dec.basis * r(g) * dec.basis.adjoint() -
                             dec.block_matrix(g))
                                .norm());
  return worst;
}

namespace detail {

inline constexpr double kCharacterTol = 1e-6;

/// Lexicographic order on complex vectors, (re, im) per entry, with
/// differences below kCharacterTol treated as ties.
inline int compare_characters(const std::vector<cplx>& a,
                              const std::vector<cplx>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dr = a[i].real() - b[i].real();
    if (std::abs(dr) > kCharacterTol) return dr < 0 ? -1 : 1;
    const double di = a[i].imag() - b[i].imag();
    if (std::abs(di) > kCharacterTol) return di < 0 ? -1 : 1;
  }
  return 0;
}

struct Copy {
  Mat basis;                 // d x k isometry spanning the invariant subspace
  std::vector<Mat> mats;     // restricted rep
  ElementFunction chi;
};

// One decomposition attempt; nullopt when a numerical degeneracy was
// detected and a reseed is needed.
inline std::optional<IrrepDecomposition> try_decompose(const UnitaryRep& r,
                                                       std::uint64_t seed) {
  const int d = r.dim();
  const int order = r.group().order();
  const GroupTable& grp = r.group();
  Rng rng(seed);

  Mat h = random_hermitian(d, rng);
  h /= std::max(1e-300, h.norm());
  const Mat t = twirl_operator(r, h);
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(t));
  const RealVec& ev = es.eigenvalues();
  const Mat& vecs = es.eigenvectors();

  // split the spectrum into clusters of (numerically) equal eigenvalues
  const double gap_tol = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<std::pair<int, int>> clusters;  // [start, size)
  for (int i = 0; i < d;) {
    int j = i + 1;
    while (j < d && ev(j) - ev(j - 1) <= gap_tol) ++j;
    clusters.emplace_back(i, j - i);
    i = j;
  }

  const double inv_tol = 1e-9 * std::max(1.0, std::sqrt(double(d)));
  std::vector<Copy> copies;
  for (auto [start, size] : clusters) {
    Copy c;
    c.basis = vecs.middleCols(start, size);
    c.mats.resize(order);
    c.chi.resize(order);
    for (int g = 0; g < order; ++g) {
      const Mat ug = r(g) * c.basis;
      c.mats[g] = c.basis.adjoint() * ug;
      if ((ug - c.basis * c.mats[g]).norm() > inv_tol) return std::nullopt;
      c.chi[g] = c.mats[g].trace();
    }
    double norm2 = 0.0;
    for (cplx x : c.chi) norm2 += std::norm(x);
    norm2 /= order;
    // an eigenspace that is not irreducible means two copies collided
    if (std::abs(norm2 - 1.0) > 1e-6) return std::nullopt;
    copies.push_back(std::move(c));
  }

  // group copies into equivalence classes by character
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(copies.size()); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      const ElementFunction& ref = copies[cls.front()].chi;
      double diff = 0.0;
      for (int g = 0; g < order; ++g)
        diff = std::max(diff, std::abs(ref[g] - copies[i].chi[g]));
      if (diff <= kCharacterTol) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }

  // align every copy in a class to the first by a unitary intertwiner
  struct Sector {
    IrrepBlock block;
    std::vector<Mat> aligned;  // per copy, d x k basis
  };
  std::vector<Sector> sectors;
  const auto& conj_classes = grp.conjugacy_classes();
  for (const auto& cls : classes) {
    const Copy& ref = copies[cls.front()];
    const int k = static_cast<int>(ref.basis.cols());
    Sector s;
    s.block.dim = k;
    s.block.mult = static_cast<int>(cls.size());
    s.block.mats = ref.mats;
    for (const auto& cc : conj_classes) s.block.character.push_back(ref.chi[cc.front()]);
    s.aligned.push_back(ref.basis);
    for (std::size_t c = 1; c < cls.size(); ++c) {
      const Copy& cp = copies[cls[c]];
      Mat unit;
      bool ok = false;
      for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
        const Mat x = ginibre(k, k, rng);
        Mat s_int = Mat::Zero(k, k);
        for (int g = 0; g < order; ++g)
          s_int.noalias() += ref.mats[g] * x * cp.mats[g].adjoint();
        s_int /= double(order);
        // Schur: s_int s_int^dagger = c I with c > 0 for a generic x
        if (s_int.norm() < 1e-6 * x.norm()) continue;
        unit = polar_unitary(s_int);
        ok = true;
      }
      if (!ok) return std::nullopt;
      s.aligned.push_back(cp.basis * unit.adjoint());
    }
    sectors.push_back(std::move(s));
  }

  std::sort(sectors.begin(), sectors.end(),
            [](const Sector& a, const Sector& b) {
              if (a.block.dim != b.block.dim) return a.block.dim < b.block.dim;
              return compare_characters(a.block.character, b.block.character) < 0;
            });

  IrrepDecomposition dec;
  dec.group = r.group_ptr();
  Mat cols(d, d);
  int offset = 0;
  for (std::size_t mu = 0; mu < sectors.size(); ++mu) {
    Sector& s = sectors[mu];
    s.block.label = static_cast<int>(mu);
    dec.offsets.push_back(offset);
    const int k = s.block.dim;
    const int n = s.block.mult;
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < k; ++a) cols.col(offset + a * n + j) = s.aligned[j].col(a);
    offset += k * n;
    dec.blocks.push_back(std::move(s.block));
  }
  if (offset != d) return std::nullopt;
  dec.basis = cols.adjoint();

  if (unitarity_residual(dec.basis) > 1e-9 * std::sqrt(double(d)))
    return std::nullopt;
  if (reconstruction_residual(r, dec) > 1e-9) return std::nullopt;
  return dec;
}

}  // namespace detail

inline constexpr int kDecomposeRetries = 5;

/// Irreducible decomposition, deterministic in (rep, seed). Throws
/// numerical-degeneracy after kDecomposeRetries reseeds.
inline IrrepDecomposition decompose(const UnitaryRep& r, std::uint64_t seed = 0) {
  for (int attempt = 0; attempt <= kDecomposeRetries; ++attempt) {
    const std::uint64_t s =
        attempt == 0 ? seed : seed + 0x9e3779b97f4a7c15ULL * attempt;
    if (auto dec = detail::try_decompose(r, s)) return *std::move(dec);
  }
  fail(ErrorKind::NumericalDegeneracy,
       "W U(g) W^dagger = (+)_mu U_mu(g) (x) I_{n_mu} could not be reached "
       "after " + std::to_string(kDecomposeRetries) + " reseeds");
}

/// All one-dimensional reps of the group, from the d_mu = 1 blocks of the
/// regular rep, as per-element values.
inline std::vector<ElementFunction> one_dim_reps(const GroupPtr& group,
                                                 std::uint64_t seed = 0) {
  const IrrepDecomposition dec = decompose(regular_rep(group), seed);
  std::vector<ElementFunction> out;
  for (const IrrepBlock& b : dec.blocks) {
    if (b.dim != 1) continue;
    ElementFunction w(group->order());
    for (int g = 0; g < group->order(); ++g) {
      const cplx v = b.mats[g](0, 0);
      w[g] = v / std::abs(v);
    }
    out.push_back(std::move(w));
  }
  return out;
}

/// W^dagger ((+)_mu I_{d_mu} (x) V_mu) W for multiplicity-space unitaries V_mu.
inline Mat invariant_unitary(const IrrepDecomposition& dec,
                             const std::vector<Mat>& sector_unitaries) {
  require(sector_unitaries.size() == dec.blocks.size(), ErrorKind::LabelMismatch,
          "one multiplicity-space unitary per irrep block");
  Mat blockdiag = Mat::Zero(dec.dim(), dec.dim());
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const IrrepBlock& b = dec.blocks[mu];
    require(sector_unitaries[mu].rows() == b.mult &&
                sector_unitaries[mu].cols() == b.mult,
            ErrorKind::DimensionMismatch, "V_mu is n_mu x n_mu");
    const int s = b.dim * b.mult;
    blockdiag.block(dec.offsets[mu], dec.offsets[mu], s, s) =
        kron(Mat::Identity(b.dim, b.dim), sector_unitaries[mu]);
  }
  return dec.basis.adjoint() * blockdiag * dec.basis;
}

/// Invariant unitary with Haar-random V_mu on every multiplicity space.
inline Mat random_invariant_unitary(const IrrepDecomposition& dec, Rng& rng) {
  std::vector<Mat> vs;
  for (const IrrepBlock& b : dec.blocks) vs.push_back(haar_unitary(b.mult, rng));
  return invariant_unitary(dec, vs);
}

}  // namespace asymkit
