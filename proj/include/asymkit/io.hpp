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

// JSON interchange. Complex numbers are [re, im] pairs; matrices are arrays
// of rows of such pairs (row-major). Doubles are rounded to 12 significant
// digits on output so reports are byte-stable.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "asymkit/approx.hpp"
#include "asymkit/bochner.hpp"
#include "json.hpp"

namespace asymkit::io {

using json = nlohmann::ordered_json;

inline double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

inline json to_json(cplx z) { return json::array({round12(z.real()), round12(z.imag())}); }
inline json real_json(double x) { return round12(x); }

inline cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          ErrorKind::Parse, "complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const ElementFunction& f) {
  json arr = json::array();
  for (cplx z : f) arr.push_back(to_json(z));
  return arr;
}

inline Mat matrix_from_json(const json& j) {
  require(j.is_array() && !j.empty(), ErrorKind::Parse,
          "matrices are non-empty arrays of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  require(j[0].is_array(), ErrorKind::Parse, "matrix rows are arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    require(j[i].is_array() && static_cast<Eigen::Index>(j[i].size()) == cols,
            ErrorKind::Parse, "matrix rows have equal length");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

inline ElementFunction function_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("values") ? j["values"] : j;
  require(arr.is_array(), ErrorKind::Parse,
          "functions are arrays of [re, im] per element");
  ElementFunction f;
  for (const json& z : arr) f.push_back(complex_from_json(z));
  return f;
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, "malformed JSON in " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// groups

inline json to_json(const GroupTable& g) {
  json j;
  j["order"] = g.order();
  j["mul"] = g.table();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

/// Either an inline {"order", "mul", "labels"} object or a named group
/// "cyclic:N", "dihedral:N", "symmetric:N".
inline GroupTable group_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto colon = s.find(':');
    require(colon != std::string::npos, ErrorKind::Parse,
            "named groups look like cyclic:N, dihedral:N or symmetric:N");
    const std::string kind = s.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "group parameter must be an integer");
    }
    if (kind == "cyclic") return make_cyclic(n);
    if (kind == "dihedral") return make_dihedral(n);
    if (kind == "symmetric") return make_symmetric(n);
    fail(ErrorKind::Parse, "unknown named group " + kind);
  }
  require(j.is_object() && j.contains("mul"), ErrorKind::Parse,
          "group objects carry a mul table");
  std::vector<std::vector<int>> mul;
  std::vector<std::string> labels;
  try {
    mul = j["mul"].get<std::vector<std::vector<int>>>();
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("group fields: ") + e.what());
  }
  if (j.contains("order"))
    require(j["order"].is_number_integer() &&
                j["order"].get<int>() == static_cast<int>(mul.size()),
            ErrorKind::InvalidGroup, "order equals the size of mul");
  return GroupTable(std::move(mul), std::move(labels));
}

// ---------------------------------------------------------------------------
// reps

inline json to_json(const UnitaryRep& r) {
  json j;
  j["group"] = to_json(r.group());
  j["dim"] = r.dim();
  json mats = json::array();
  for (const Mat& m : r.mats()) mats.push_back(to_json(m));
  j["mats"] = std::move(mats);
  return j;
}

struct LoadedRep {
  UnitaryRep rep;
  std::optional<std::vector<int>> weights;  // set for weight reps
};

/// {"group": ..., "dim": d, "mats": [...]} or the shorthands
/// {"group": ..., "kind": "regular"} and
/// {"group": "cyclic:N", "kind": "weights", "weights": [...]}.
/// A group supplied separately overrides the embedded one.
inline LoadedRep rep_from_json(const json& j, GroupPtr group = nullptr) {
  require(j.is_object(), ErrorKind::Parse, "reps are JSON objects");
  if (!group) {
    require(j.contains("group"), ErrorKind::Parse, "rep needs a group");
    group = share(group_from_json(j["group"]));
  }
  const std::string kind = j.value("kind", std::string("explicit"));
  if (kind == "regular") return {regular_rep(group), std::nullopt};
  if (kind == "weights") {
    std::vector<int> w;
    try {
      w = j.at("weights").get<std::vector<int>>();
    } catch (const json::exception& e) {
      fail(ErrorKind::Parse, std::string("weights: ") + e.what());
    }
    return {weight_rep(group, w), w};
  }
  require(kind == "explicit", ErrorKind::Parse, "unknown rep kind " + kind);
  require(j.contains("mats") && j["mats"].is_array(), ErrorKind::Parse,
          "explicit reps carry mats");
  std::vector<Mat> mats;
  for (const json& m : j["mats"]) mats.push_back(matrix_from_json(m));
  if (j.contains("dim") && !mats.empty())
    require(j["dim"].get<long>() == mats[0].rows(), ErrorKind::InvalidRep,
            "dim equals the matrix size");
  return {UnitaryRep(group, std::move(mats)), std::nullopt};
}

inline json to_json(const IrrepDecomposition& dec) {
  json j;
  j["dim"] = dec.dim();
  j["W"] = to_json(dec.basis);
  j["offsets"] = dec.offsets;
  json blocks = json::array();
  for (const IrrepBlock& b : dec.blocks) {
    json jb;
    jb["label"] = b.label;
    jb["dim"] = b.dim;
    jb["mult"] = b.mult;
    jb["character"] = to_json(ElementFunction(b.character));
    json mats = json::array();
    for (const Mat& m : b.mats) mats.push_back(to_json(m));
    jb["mats"] = std::move(mats);
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

// ---------------------------------------------------------------------------
// states

inline json to_json(const QuantumState& s) {
  json j;
  if (s.is_pure()) {
    j["kind"] = "pure";
    json data = json::array();
    for (Eigen::Index i = 0; i < s.vec().size(); ++i) data.push_back(to_json(s.vec()(i)));
    j["data"] = std::move(data);
  } else {
    j["kind"] = "mixed";
    j["data"] = to_json(s.rho());
  }
  return j;
}

/// {"kind": "pure", "data": [[re, im], ...]} (normalized on load when
/// "normalize": true) or {"kind": "mixed", "data": matrix}.
inline QuantumState state_from_json(const json& j) {
  require(j.is_object() && j.contains("kind") && j.contains("data"),
          ErrorKind::Parse, "states carry kind and data");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "pure") {
    const ElementFunction amps = function_from_json(j["data"]);
    Vec v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v(Eigen::Index(i)) = amps[i];
    if (j.value("normalize", false)) return QuantumState::pure_normalized(v);
    return QuantumState::pure(std::move(v));
  }
  if (kind == "mixed") return QuantumState::mixed(matrix_from_json(j["data"]));
  fail(ErrorKind::Parse, "state kind is pure or mixed");
}

/// {"kind": "weights", "data": [[n, p], ...]}
inline std::optional<WeightState> weights_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", std::string()) != "weights")
    return std::nullopt;
  std::map<int, double> p;
  for (const json& e : j.at("data")) {
    require(e.is_array() && e.size() == 2, ErrorKind::Parse,
            "weight entries are [n, p] pairs");
    p[e[0].get<int>()] += e[1].get<double>();
  }
  return WeightState(std::move(p));
}

inline json to_json(const WeightState& w) {
  json data = json::array();
  for (auto [n, p] : w.distribution()) data.push_back(json::array({n, round12(p)}));
  return json{{"kind", "weights"}, {"data", std::move(data)}};
}

inline json to_json(const CharFunction& f) {
  json j;
  json labels = json::array();
  for (int g = 0; g < f.size(); ++g) labels.push_back(f.group->label(g));
  j["labels"] = std::move(labels);
  j["values"] = to_json(f.values);
  return j;
}

inline json to_json(const IrrepReduction& red) {
  json arr = json::array();
  for (std::size_t mu = 0; mu < red.blocks.size(); ++mu)
    arr.push_back(json{{"label", mu}, {"F", to_json(red.blocks[mu])}});
  return arr;
}

// ---------------------------------------------------------------------------
// channels

inline json to_json(const QuantumChannel& c) {
  json kraus = json::array();
  for (const Mat& k : c.kraus()) kraus.push_back(to_json(k));
  return json{{"d_in", c.d_in()}, {"d_out", c.d_out()}, {"kraus", std::move(kraus)}};
}

inline QuantumChannel channel_from_json(const json& j) {
  require(j.is_object() && j.contains("d_in") && j.contains("d_out") &&
              j.contains("kraus"),
          ErrorKind::Parse, "channels carry d_in, d_out and kraus");
  std::vector<Mat> kraus;
  for (const json& k : j["kraus"]) kraus.push_back(matrix_from_json(k));
  return QuantumChannel(j["d_in"].get<int>(), j["d_out"].get<int>(), std::move(kraus));
}

// ---------------------------------------------------------------------------
// reports

inline json to_json(const EquivalenceVerdict& v) {
  json j;
  j["status"] = std::string(to_string(v.status));
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.one_dim_rep) j["one_dim_rep"] = to_json(*v.one_dim_rep);
  if (v.certificate) j["certificate"] = *v.certificate;
  return j;
}

inline json to_json(const OverlapReport& r) {
  json j;
  j["optimal"] = round12(r.optimal);
  json fids = json::array();
  for (double f : r.per_mu_fidelity) fids.push_back(round12(f));
  j["per_mu_fidelity"] = std::move(fids);
  j["bound_trace"] = round12(r.bound_trace);
  j["bound_charfunc_global"] = round12(r.bound_charfunc_global);
  j["bound_charfunc_per_mu"] = round12(r.bound_charfunc_per_mu);
  j["witness"] = to_json(r.witness);
  return j;
}

inline json to_json(const PositiveDefiniteReport& r) {
  json j;
  j["positive_definite"] = r.positive_definite;
  j["normalized"] = r.normalized;
  j["hermitian_blocks"] = r.hermitian_blocks;
  j["min_eigenvalue"] = round12(r.min_eigenvalue);
  j["min_label"] = r.min_label;
  json per = json::array();
  for (double e : r.block_min_eigenvalues) per.push_back(round12(e));
  j["block_min_eigenvalues"] = std::move(per);
  return j;
}

}  // namespace asymkit::io
