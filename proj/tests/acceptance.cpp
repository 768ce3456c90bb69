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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from brute-force oracles defined here.

#include <cstdio>
#include <functional>
#include <string>

#include "testing.hpp"

using namespace asymkit;
using testing::basis_vector;
using testing::max_diff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Sector matrix A with A(a, j) = (W psi)[offset + a n + j].
Mat sector_of(const IrrepDecomposition& dec, const Vec& psi, int mu) {
  const Vec local = dec.basis * psi;
  const IrrepBlock& b = dec.blocks[mu];
  Mat a(b.dim, b.mult);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.mult; ++j) a(i, j) = local(dec.offsets[mu] + i * b.mult + j);
  return a;
}

// W^dag (+)_mu (I_d (x) V_mu) W with Haar V_mu, assembled by hand.
Mat sample_invariant_unitary(const IrrepDecomposition& dec, Rng& rng) {
  Mat local = Mat::Zero(dec.dim(), dec.dim());
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const IrrepBlock& b = dec.blocks[mu];
    const int s = b.dim * b.mult;
    local.block(dec.offsets[mu], dec.offsets[mu], s, s) =
        kron(Mat::Identity(b.dim, b.dim), haar_unitary(b.mult, rng));
  }
  return dec.basis.adjoint() * local * dec.basis;
}

// min over alpha of |v - e^{i alpha} w|
double phase_free_error(const Vec& v, const Vec& w) {
  const cplx ip = w.dot(v);
  const cplx ph = std::abs(ip) > 0 ? ip / std::abs(ip) : cplx(1.0);
  return (v - ph * w).norm();
}

double max_comm(const UnitaryRep& r, const Mat& v) {
  double worst = 0.0;
  for (const Mat& u : r.mats()) worst = std::max(worst, (v * u - u * v).norm());
  return worst;
}

// Per-irrep trace distance of reductions, F = A A^dag.
double reduction_gap(const IrrepDecomposition& dec, const Vec& a, const Vec& b) {
  double worst = 0.0;
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const Mat sa = sector_of(dec, a, int(mu)), sb = sector_of(dec, b, int(mu));
    Eigen::SelfAdjointEigenSolver<Mat> es(sa * sa.adjoint() - sb * sb.adjoint());
    worst = std::max(worst, es.eigenvalues().cwiseAbs().sum());
  }
  return worst;
}

// Uhlmann form: sum_mu |B_mu^dag A_mu|_1.
double uhlmann_sum(const IrrepDecomposition& dec, const Vec& a, const Vec& b) {
  double sum = 0.0;
  for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
    const Eigen::JacobiSVD<Mat> svd(sector_of(dec, b, int(mu)).adjoint() *
                                    sector_of(dec, a, int(mu)));
    sum += svd.singularValues().sum();
  }
  return sum;
}

QuantumState symmetric_pure(const UnitaryRep& r, Rng& rng) {
  const GroupTable& g = r.group();
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  const SubgroupRef k = generated_subgroup(g, {pick(rng)});
  const Vec seed = random_unit_vector(r.dim(), rng);
  Vec v = Vec::Zero(r.dim());
  for (int h : k.elements()) v += r(h) * seed;
  if (v.norm() < 1e-6) return QuantumState::pure(seed);
  return QuantumState::pure_normalized(v);
}

QuantumState symmetric_mixed(const UnitaryRep& r, Rng& rng) {
  const GroupTable& g = r.group();
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  const SubgroupRef k = generated_subgroup(g, {pick(rng)});
  const Mat seed = random_density_matrix(r.dim(), rng);
  Mat rho = Mat::Zero(r.dim(), r.dim());
  for (int h : k.elements()) rho += r(h) * seed * r(h).adjoint();
  return QuantumState::mixed(rho / double(k.order()));
}

int trivial_label(const IrrepDecomposition& dec) {
  for (const IrrepBlock& b : dec.blocks) {
    if (b.dim != 1) continue;
    bool all_one = true;
    for (int g = 0; g < dec.group->order(); ++g)
      all_one = all_one && std::abs(b.trace(g) - cplx(1.0)) < 1e-9;
    if (all_one) return b.label;
  }
  return -1;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome decomposition_correctness() {
  Outcome o;
  double worst = 0.0;
  for (const auto& ng : testing::standard_groups()) {
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    for (int g = 0; g < ng.group->order(); ++g) {
      Mat blocks = Mat::Zero(dec.dim(), dec.dim());
      for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu) {
        const IrrepBlock& b = dec.blocks[mu];
        blocks.block(dec.offsets[mu], dec.offsets[mu], b.dim * b.mult, b.dim * b.mult) =
            kron(b.mats[g], Mat::Identity(b.mult, b.mult));
      }
      worst = std::max(worst, (dec.basis * reg(g) * dec.basis.adjoint() - blocks).norm());
    }
    int dsum = 0;
    for (const IrrepBlock& b : dec.blocks) dsum += b.dim * b.dim;
    const bool counts =
        dsum == ng.group->order() &&
        dec.blocks.size() == testing::brute_conjugacy_orbits(*ng.group).size();
    if (!counts) {
      o.pass = false;
      o.detail += ng.name + " dims/count mismatch; ";
    }
  }
  o.pass = o.pass && worst <= 1e-8;
  o.detail += "max residual " + fmt(worst) + " over 7 groups";
  return o;
}

Outcome fourier_round_trip() {
  Outcome o;
  Rng rng(101);
  double worst = 0.0;
  for (const auto& ng : testing::standard_groups()) {
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    const int n = reg.dim();
    for (int i = 0; i < 200; ++i) {
      const QuantumState s =
          i < 100 ? testing::random_pure(n, rng) : testing::random_mixed(n, rng);
      const CharFunction chi = charfunc(s, reg);
      const IrrepReduction red = reduction_onto_irreps(s, dec);
      worst = std::max(worst, max_diff(charfunc_from_reduction(red, dec).values, chi.values));
      worst = std::max(worst, testing::max_block_diff(fourier_inverse(chi, dec), red));
    }
  }
  o.pass = worst <= 1e-10;
  o.detail = "1400 states, max error " + fmt(worst);
  return o;
}

Outcome unitary_positive() {
  Outcome o;
  Rng rng(102);
  const auto groups = testing::standard_groups();
  int equivalent = 0;
  double worst = 0.0, worst_comm = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto& ng = groups[i % groups.size()];
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    const QuantumState psi = testing::random_pure(reg.dim(), rng);
    const QuantumState phi = QuantumState::pure_normalized(
        sample_invariant_unitary(dec, rng) * psi.vec());
    const EquivalenceVerdict v = decide_unitary_g_equivalence(psi, phi, dec);
    if (!v.equivalent() || !v.witness) continue;
    ++equivalent;
    worst = std::max(worst, phase_free_error(*v.witness * psi.vec(), phi.vec()));
    worst_comm = std::max(worst_comm, max_comm(reg, *v.witness));
  }
  o.pass = equivalent == 100 && worst <= 1e-8 && worst_comm <= 1e-8;
  o.detail = std::to_string(equivalent) + "/100 Equivalent, witness error " + fmt(worst) +
             ", commutator " + fmt(worst_comm);
  return o;
}

Outcome unitary_negative() {
  Outcome o;
  Rng rng(103);
  const auto groups = testing::standard_groups();
  int pairs = 0, rejected = 0, violations = 0;
  double min_gap = 1e300;
  while (pairs < 100) {
    const auto& ng = groups[pairs % groups.size()];
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    const QuantumState psi = testing::random_pure(reg.dim(), rng);
    // move weight between sectors of V psi
    const Vec base = sample_invariant_unitary(dec, rng) * psi.vec();
    const int mu = std::uniform_int_distribution<int>(0, int(dec.blocks.size()) - 1)(rng);
    const Vec phi_v = (base + 0.2 * dec.projector(mu) * base).normalized();
    const QuantumState phi = QuantumState::pure(phi_v);
    const double gap = reduction_gap(dec, psi.vec(), phi_v);
    if (gap < 1e-3) continue;
    ++pairs;
    min_gap = std::min(min_gap, gap);
    if (decide_unitary_g_equivalence(psi, phi, dec).status == EquivalenceStatus::NotEquivalent)
      ++rejected;
    const double best = max_overlap(psi, phi, dec).optimal;
    for (int k = 0; k < 200; ++k) {
      const double ov = std::abs(phi_v.dot(sample_invariant_unitary(dec, rng) * psi.vec()));
      if (ov > best + 1e-8) ++violations;
    }
  }
  o.pass = rejected == 100 && violations == 0;
  o.detail = std::to_string(rejected) + "/100 NotEquivalent (min gap " + fmt(min_gap) +
             "), " + std::to_string(violations) + " of 20000 samples beat max_overlap";
  return o;
}

struct PairStats {
  double achieve = 0.0, sum_vs_oracle = 0.0, bound_excess = -1e300;
  int pairs = 0;
};

PairStats overlap_pairs() {
  PairStats st;
  Rng rng(104);
  const std::vector<GroupPtr> groups = {share(make_symmetric(3)), share(make_dihedral(4))};
  for (int i = 0; i < 100; ++i) {
    const GroupPtr& g = groups[i % 2];
    const UnitaryRep reg = regular_rep(g);
    const IrrepDecomposition dec = decompose(reg, 0);
    const QuantumState a = testing::random_pure(reg.dim(), rng);
    const QuantumState b = testing::random_pure(reg.dim(), rng);
    const OverlapReport rep = max_overlap(a, b, dec);
    const double achieved = std::abs(b.vec().dot(rep.witness * a.vec()));
    st.achieve = std::max(st.achieve, std::abs(achieved - rep.optimal));
    st.sum_vs_oracle =
        std::max(st.sum_vs_oracle, std::abs(rep.optimal - uhlmann_sum(dec, a.vec(), b.vec())));
    st.bound_excess = std::max({st.bound_excess, rep.bound_trace - rep.optimal,
                                rep.bound_charfunc_global - rep.optimal,
                                rep.bound_charfunc_per_mu - rep.optimal});
    ++st.pairs;
  }
  return st;
}

Outcome overlap_achievability(const PairStats& st) {
  Outcome o;
  // Z2 on C^3 with U(s) = diag(1, 1, -1)
  const GroupPtr z2 = share(make_cyclic(2));
  const IrrepDecomposition dec = decompose(weight_rep(z2, {0, 0, 1}), 0);
  const QuantumState p1 = QuantumState::pure(basis_vector(3, 0));
  Vec v2 = Vec::Zero(3);
  v2(1) = v2(2) = std::sqrt(0.5);
  const QuantumState p2 = QuantumState::pure(v2);
  const double optimal = max_overlap(p1, p2, dec).optimal;
  // grid over diag(U2, e^{i beta}); U2's first column (cos t, e^{i a} sin t)
  double grid = 0.0;
  for (int it = 0; it <= 400; ++it)
    for (int ia = 0; ia < 8; ++ia)
      for (int ib = 0; ib < 4; ++ib) {
        const double t = 0.5 * kPi * it / 400;
        Mat v = Mat::Zero(3, 3);
        v(0, 0) = v(1, 1) = std::cos(t);
        v(1, 0) = phase(2 * kPi * ia / 8) * std::sin(t);
        v(0, 1) = -std::conj(v(1, 0));
        v(2, 2) = phase(2 * kPi * ib / 4);
        grid = std::max(grid, std::abs(v2.dot(v * p1.vec())));
      }
  o.pass = st.achieve <= 1e-10 && st.sum_vs_oracle <= 1e-10 &&
           std::abs(optimal - std::sqrt(0.5)) <= 1e-9 && std::abs(grid - optimal) <= 1e-6;
  o.detail = "S3/D4 achievability gap " + fmt(st.achieve) + ", fidelity-sum vs Uhlmann " +
             fmt(st.sum_vs_oracle) + "; Z2 optimal - sqrt(1/2) = " +
             fmt(optimal - std::sqrt(0.5)) + ", grid gap " + fmt(grid - optimal);
  return o;
}

Outcome overlap_bounds(const PairStats& st) {
  Outcome o;
  Rng rng(105);
  int holds = 0;
  std::uniform_int_distribution<int> dim(1, 6);
  for (int i = 0; i < 1000; ++i) {
    const int d = dim(rng);
    const int ka = std::uniform_int_distribution<int>(1, d)(rng);
    const int kb = std::uniform_int_distribution<int>(1, d)(rng);
    const Mat ga = ginibre(d, ka, rng), gb = ginibre(d, kb, rng);
    const Mat a = ga * ga.adjoint(), b = gb * gb.adjoint();
    holds += trace_distance_fidelity_check(a / a.trace().real(), b * 0.7 / b.trace().real());
  }
  o.pass = st.bound_excess <= 1e-8 && holds == 1000;
  o.detail = "max(bound - optimal) " + fmt(st.bound_excess) + " on " +
             std::to_string(st.pairs) + " pairs; trace/fidelity inequality " +
             std::to_string(holds) + "/1000";
  return o;
}

Outcome u1_narrative() {
  Outcome o;
  const GroupPtr z16 = share(make_cyclic(16));
  const UnitaryRep nr = number_rep(z16, 16);
  const IrrepDecomposition dec = decompose(nr, 0);
  Vec a = Vec::Zero(16), b = Vec::Zero(16);
  a(0) = a(1) = b(2) = b(3) = 1.0 / std::sqrt(2.0);
  const QuantumState psi = QuantumState::pure(a), phi = QuantumState::pure(b);

  const bool not_unitary =
      decide_unitary_g_equivalence(psi, phi, dec).status == EquivalenceStatus::NotEquivalent;
  const EquivalenceVerdict g = decide_g_equivalence(psi, phi, nr);
  double omega_err = g.one_dim_rep ? 0.0 : 1.0;
  if (g.one_dim_rep)
    for (int k = 0; k < 16; ++k)
      omega_err = std::max(omega_err, std::abs((*g.one_dim_rep)[k] - phase(4 * kPi * k / 16)));
  const auto delta = u1_shift_equivalence(WeightState({{0, 0.5}, {1, 0.5}}),
                                          WeightState({{2, 0.5}, {3, 0.5}}));
  const QuantumChannel shift = unitary_channel(cyclic_shift(16, 2));
  const CovarianceCheck cov = is_g_covariant(shift, nr, nr);
  const double state_err = (apply(shift, psi).rho() - b * b.adjoint()).norm();

  o.pass = not_unitary && g.equivalent() && omega_err <= 1e-9 && delta == 2 &&
           cov.residual <= 1e-10 && state_err <= 1e-10;
  o.detail = std::string("unitary ") + (not_unitary ? "NotEquivalent" : "?") + ", G-equiv " +
             std::string(to_string(g.status)) + " (omega err " + fmt(omega_err) + "), delta " +
             (delta ? std::to_string(*delta) : "none") + ", covariance residual " +
             fmt(cov.residual) + ", state error " + fmt(state_err);
  return o;
}

Outcome mixed_counterexample() {
  Outcome o;
  const GroupPtr z16 = share(make_cyclic(16));
  const UnitaryRep nr = number_rep(z16, 2);
  Vec v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const QuantumState pure = QuantumState::pure(v);
  const QuantumState mixed = QuantumState::mixed(Mat::Identity(2, 2) / 2.0);
  const double diff = max_diff(charfunc(pure, nr).values, charfunc(mixed, nr).values);
  auto rejects = [&](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::PureOnly;
    }
    return false;
  };
  const IrrepDecomposition dec = decompose(nr, 0);
  const bool r1 = rejects([&] { decide_g_equivalence(pure, mixed, nr); });
  const bool r2 = rejects([&] { decide_unitary_g_equivalence(mixed, pure, dec); });
  o.pass = diff <= 1e-12 && r1 && r2;
  o.detail = "chi difference " + fmt(diff) + ", pure-only error " +
             (r1 && r2 ? "raised" : "missing");
  return o;
}

Outcome bochner_gns() {
  Outcome o;
  Rng rng(106);
  const auto groups = testing::standard_groups();
  // forward and backward on 100 valid functions
  int valid = 0;
  double gns_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto& ng = groups[i % groups.size()];
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    const QuantumState s = i % 2 ? testing::random_pure(reg.dim(), rng)
                                 : testing::random_mixed(reg.dim(), rng);
    const CharFunction chi = charfunc(s, reg);
    const PositiveDefiniteReport rep = is_positive_definite(chi, dec);
    valid += rep.positive_definite && rep.normalized;
    const GnsResult g = gns_construct(chi);
    gns_err = std::max(gns_err, max_diff(charfunc(g.state, g.rep).values, chi.values));
  }
  // sensitivity: states without a trivial-isotypic component, so every
  // single-point perturbation leaves the positive cone
  int rejected = 0, oracle_breaks = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& ng = groups[1 + i % (groups.size() - 1)];  // skip Z2: |G| - 1 = 1
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    const int n = reg.dim();
    const int trivial = trivial_label(dec);
    const Mat keep = Mat::Identity(n, n) - dec.projector(trivial);
    CharFunction chi =
        charfunc(QuantumState::pure_normalized(keep * random_unit_vector(n, rng)), reg);
    chi.values[std::uniform_int_distribution<int>(1, n - 1)(rng)] -= 0.1;
    rejected += !is_positive_definite(chi, dec).positive_definite;
    oracle_breaks += !testing::gram_oracle_psd(chi);
  }
  // specificity: generic states, the detector must match the Gram oracle
  int generic = 0, generic_rejected = 0, false_rejections = 0, misses = 0;
  for (const auto& ng : groups) {
    if (ng.group->order() < 2) continue;
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    const int n = reg.dim();
    for (int i = 0; i < 50; ++i) {
      CharFunction chi = charfunc(i % 2 ? testing::random_pure(n, rng)
                                        : testing::random_mixed(n, rng),
                                  reg);
      chi.values[std::uniform_int_distribution<int>(1, n - 1)(rng)] -= 0.1;
      const bool rej = !is_positive_definite(chi, dec).positive_definite;
      const bool oracle_ok = testing::gram_oracle_psd(chi);
      ++generic;
      generic_rejected += rej;
      false_rejections += rej && oracle_ok;
      misses += !rej && !oracle_ok;
    }
  }
  o.pass = valid == 100 && gns_err <= 1e-9 && rejected >= 95 && false_rejections == 0 &&
           misses == 0;
  o.detail = std::to_string(valid) + "/100 valid, GNS error " + fmt(gns_err) + "; " +
             std::to_string(rejected) + "/100 perturbations rejected (oracle: " +
             std::to_string(oracle_breaks) + " invalid); generic states: " +
             std::to_string(generic_rejected) + "/" + std::to_string(generic) +
             " rejected, " + std::to_string(false_rejections) + " false rejections, " +
             std::to_string(misses) + " misses vs Gram oracle";
  return o;
}

Outcome property_suite() {
  Outcome o;
  Rng rng(107);
  double mult = 0.0, conj_act = 0.0, unit = 0.0, bounded = 0.0, additivity = 0.0;
  int sym_mismatch = 0, instances = 0;
  for (const auto& ng : testing::standard_groups()) {
    const GroupTable& g = *ng.group;
    const UnitaryRep reg = regular_rep(ng.group);
    const IrrepDecomposition dec = decompose(reg, 0);
    const int n = reg.dim();
    // second tensor factor: the regular rep for small groups, else the
    // largest irrep
    const UnitaryRep other =
        n <= 8 ? reg : UnitaryRep(ng.group, dec.blocks.back().mats);
    const UnitaryRep prod = tensor_rep(reg, other);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    std::vector<Mat> projectors;
    for (std::size_t mu = 0; mu < dec.blocks.size(); ++mu)
      projectors.push_back(dec.projector(int(mu)));
    for (int i = 0; i < 50; ++i, ++instances) {
      const QuantumState s =
          i % 2 ? testing::random_pure(n, rng) : testing::random_mixed(n, rng);
      const CharFunction chi = charfunc(s, reg);
      // tensor multiplicativity
      const QuantumState t = i % 2 ? testing::random_pure(other.dim(), rng)
                                   : testing::random_mixed(other.dim(), rng);
      const CharFunction ct = charfunc(t, other);
      const CharFunction cst = charfunc(tensor_state(s, t), prod);
      for (int x = 0; x < g.order(); ++x)
        mult = std::max(mult, std::abs(cst[x] - chi[x] * ct[x]));
      // conjugate action
      const int h = pick(rng);
      const CharFunction moved = charfunc(transform(s, reg(h)), reg);
      for (int x = 0; x < g.order(); ++x)
        conj_act = std::max(conj_act, std::abs(moved[x] - chi[g.mul(g.mul(g.inv(h), x), h)]));
      // normalization and boundedness
      unit = std::max(unit, std::abs(chi[0] - cplx(1.0)));
      for (cplx c : chi.values) bounded = std::max(bounded, std::abs(c) - 1.0);
      // sector additivity
      const Mat rho = s.density();
      ElementFunction sum(g.order(), 0.0);
      for (const Mat& p : projectors) {
        const Mat part = p * rho * p;
        for (int x = 0; x < g.order(); ++x) sum[x] += (part * reg(x)).trace();
      }
      additivity = std::max(additivity, max_diff(sum, chi.values));
      // pure-state symmetries are exactly where |chi| = 1
      const QuantumState sp = symmetric_pure(reg, rng);
      const CharFunction cp = charfunc(sp, reg);
      const SubgroupRef sym = symmetry_subgroup(sp, reg);
      for (int x = 0; x < g.order(); ++x)
        sym_mismatch += (std::abs(std::abs(cp[x]) - 1.0) < 1e-9) != sym.contains(x);
    }
  }
  o.pass = mult <= 1e-12 && conj_act <= 1e-12 && unit <= 1e-12 && bounded <= 1e-12 &&
           additivity <= 1e-12 && sym_mismatch == 0;
  o.detail = std::to_string(instances) + " instances: tensor " + fmt(mult) + ", conjugation " +
             fmt(conj_act) + ", chi(e) " + fmt(unit) + ", |chi|-1 " + fmt(bounded) +
             ", additivity " + fmt(additivity) + ", symmetry mismatches " +
             std::to_string(sym_mismatch);
  return o;
}

Outcome monotonicity() {
  Outcome o;
  Rng rng(108);
  const GroupPtr d4 = share(make_dihedral(4));
  const UnitaryRep reg = regular_rep(d4);
  int violations = 0, nontrivial = 0;
  for (int c = 0; c < 20; ++c) {
    const QuantumChannel e = twirl_channel(testing::random_channel(8, 2, rng), reg);
    for (int i = 0; i < 50; ++i) {
      const QuantumState s = i % 5 == 0 ? testing::random_mixed(8, rng) : symmetric_mixed(reg, rng);
      const SubgroupRef before = symmetry_subgroup(s, reg, 1e-8);
      const SubgroupRef after = symmetry_subgroup(apply(e, s), reg, 1e-8);
      nontrivial += before.order() > 1;
      violations += !is_subset(before, after);
    }
  }
  o.pass = violations == 0;
  o.detail = "20 channels x 50 states (" + std::to_string(nontrivial) +
             " with nontrivial symmetry), " + std::to_string(violations) + " violations";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto run = [&](int id, const char* name, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };
  run(1, "decomposition correctness", decomposition_correctness);
  run(2, "Fourier round trip", fourier_round_trip);
  run(3, "unitary equivalence, positive cases", unitary_positive);
  run(4, "unitary equivalence, negative cases", unitary_negative);
  const PairStats pairs = overlap_pairs();
  run(5, "optimal overlap achievability", [&] { return overlap_achievability(pairs); });
  run(6, "overlap lower bounds", [&] { return overlap_bounds(pairs); });
  run(7, "U(1) narrative on Z16", u1_narrative);
  run(8, "mixed-state counterexample", mixed_counterexample);
  run(9, "positive-definiteness and GNS", bochner_gns);
  run(10, "characteristic function properties", property_suite);
  run(11, "symmetry monotonicity", monotonicity);
  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
