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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asymkit/asymkit.hpp"
#include "asymkit/io.hpp"

namespace {

using namespace asymkit;
using io::json;

constexpr int kExitValidation = 2;
constexpr int kExitDegenerate = 3;

struct Config {
  std::string command;
  std::string group;
  std::vector<std::string> reps;
  std::vector<std::string> states;
  std::string func;
  std::string channel;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string format = "json";
};

double tol_or(const Config& c, double fallback) { return c.tol.value_or(fallback); }

void need(bool ok, const std::string& what) {
  require(ok, ErrorKind::InvalidParameter, what);
}

GroupPtr load_group(const Config& c) {
  need(!c.group.empty(), c.command + " needs --group");
  return share(io::group_from_json(io::read_file(c.group)));
}

io::LoadedRep load_rep(const Config& c, std::size_t i = 0) {
  need(c.reps.size() > i, c.command + " needs " + std::to_string(i + 1) + " --rep");
  GroupPtr g = c.group.empty() ? nullptr : load_group(c);
  return io::rep_from_json(io::read_file(c.reps[i]), g);
}

std::vector<QuantumState> load_states(const Config& c, std::size_t n) {
  need(c.states.size() == n,
       c.command + " needs exactly " + std::to_string(n) + " --state");
  std::vector<QuantumState> out;
  for (const std::string& p : c.states) out.push_back(io::state_from_json(io::read_file(p)));
  return out;
}

CharFunction load_func(const Config& c, const GroupPtr& g) {
  need(!c.func.empty(), c.command + " needs --func");
  CharFunction f{g, io::function_from_json(io::read_file(c.func))};
  require(f.size() == g->order(), ErrorKind::DimensionMismatch,
          "function has one value per group element");
  return f;
}

QuantumChannel load_channel(const Config& c) {
  need(!c.channel.empty(), c.command + " needs --channel");
  return io::channel_from_json(io::read_file(c.channel));
}

json dims_json(const IrrepDecomposition& dec) {
  json arr = json::array();
  for (auto [d, n] : dec.dims_and_mults()) arr.push_back(json::array({d, n}));
  return arr;
}

// label, dimension and per-class character of each irrep
json irreps_json(const IrrepDecomposition& dec) {
  json arr = json::array();
  for (const IrrepBlock& b : dec.blocks)
    arr.push_back(json{{"label", b.label},
                       {"dim", b.dim},
                       {"character", io::to_json(ElementFunction(b.character))}});
  return arr;
}

json run(const Config& c) {
  const std::string& cmd = c.command;
  if (cmd == "group") {
    const GroupPtr g = load_group(c);
    return json{{"order", g->order()},
                {"abelian", g->is_abelian()},
                {"inverses", g->inverses()},
                {"conjugacy_classes", g->conjugacy_classes()}};
  }
  if (cmd == "decompose") {
    const io::LoadedRep r = load_rep(c);
    const IrrepDecomposition dec = decompose(r.rep, c.seed);
    json j{{"dims_and_mults", dims_json(dec)},
           {"residual", io::round12(reconstruction_residual(r.rep, dec))}};
    j["decomposition"] = io::to_json(dec);
    return j;
  }
  if (cmd == "charfunc") {
    const io::LoadedRep r = load_rep(c);
    return io::to_json(charfunc(load_states(c, 1)[0], r.rep));
  }
  if (cmd == "reduce") {
    const io::LoadedRep r = load_rep(c);
    const IrrepDecomposition dec = decompose(r.rep, c.seed);
    return json{{"dims_and_mults", dims_json(dec)},
                {"reduction", io::to_json(reduction_onto_irreps(load_states(c, 1)[0], dec))}};
  }
  if (cmd == "fourier") {
    const io::LoadedRep r = load_rep(c);
    const IrrepDecomposition dec = decompose(r.rep, c.seed);
    const IrrepReduction red = fourier_inverse(load_func(c, r.rep.group_ptr()), dec);
    return json{{"dims_and_mults", dims_json(dec)},
                {"reduction", io::to_json(red)},
                {"is_state_reduction", is_state_reduction(red, tol_or(c, 1e-9))}};
  }
  if (cmd == "uequiv") {
    const io::LoadedRep r = load_rep(c);
    const auto s = load_states(c, 2);
    const IrrepDecomposition dec = decompose(r.rep, c.seed);
    const EquivalenceVerdict v = decide_unitary_g_equivalence(s[0], s[1], dec, tol_or(c, 1e-8));
    json j = io::to_json(v);
    j["reduction_distance"] = io::round12(v.reduction_distance);
    return j;
  }
  if (cmd == "equiv") {
    const io::LoadedRep r = load_rep(c);
    const auto s = load_states(c, 2);
    return io::to_json(decide_g_equivalence(s[0], s[1], r.rep, c.seed));
  }
  if (cmd == "u1shift") {
    need(c.states.size() == 2, "u1shift needs exactly 2 --state");
    std::vector<WeightState> w;
    for (const std::string& p : c.states) {
      const auto ws = io::weights_from_json(io::read_file(p));
      require(ws.has_value(), ErrorKind::Parse, "u1shift states are weight distributions");
      w.push_back(*ws);
    }
    const auto delta = u1_shift_equivalence(w[0], w[1], tol_or(c, 1e-9));
    return json{{"equivalent", delta.has_value()},
                {"delta", delta ? json(*delta) : json(nullptr)}};
  }
  if (cmd == "overlap") {
    const io::LoadedRep r = load_rep(c);
    const auto s = load_states(c, 2);
    return io::to_json(max_overlap(s[0], s[1], decompose(r.rep, c.seed)));
  }
  if (cmd == "bochner") {
    const GroupPtr g = load_group(c);
    const IrrepDecomposition dec = decompose(regular_rep(g), c.seed);
    json j = io::to_json(is_positive_definite(load_func(c, g), dec, tol_or(c, 1e-9)));
    j["irreps"] = irreps_json(dec);
    return j;
  }
  if (cmd == "gns") {
    const GroupPtr g = load_group(c);
    const GnsResult res = gns_construct(load_func(c, g), tol_or(c, 1e-9));
    json rep = io::to_json(res.rep);
    rep.erase("group");
    return json{{"dim", res.dim}, {"state", io::to_json(res.state)}, {"rep", std::move(rep)}};
  }
  if (cmd == "covcheck") {
    const io::LoadedRep rin = load_rep(c, 0);
    const io::LoadedRep rout = c.reps.size() > 1 ? load_rep(c, 1) : rin;
    const CovarianceCheck chk =
        is_g_covariant(load_channel(c), rin.rep, rout.rep, tol_or(c, 1e-10));
    return json{{"covariant", chk.covariant}, {"residual", io::round12(chk.residual)}};
  }
  if (cmd == "twirl") {
    const io::LoadedRep r = load_rep(c);
    const QuantumChannel t = twirl_channel(load_channel(c), r.rep);
    const CovarianceCheck chk = is_g_covariant(t, r.rep, r.rep, tol_or(c, 1e-10));
    return json{{"channel", io::to_json(t)},
                {"covariant", chk.covariant},
                {"residual", io::round12(chk.residual)}};
  }
  if (cmd == "embed") {
    const io::LoadedRep rin = load_rep(c, 0);
    const io::LoadedRep rout = load_rep(c, 1);
    const QuantumChannel in = load_channel(c);
    const QuantumChannel e = embed_channel(in, rin.rep, rout.rep);
    const UnitaryRep sum = direct_sum_rep(rin.rep, rout.rep);
    const CovarianceCheck chk = is_g_covariant(e, sum, sum, tol_or(c, 1e-10));
    return json{{"channel", io::to_json(e)},
                {"input_covariant", is_g_covariant(in, rin.rep, rout.rep, tol_or(c, 1e-10)).covariant},
                {"covariant", chk.covariant},
                {"residual", io::round12(chk.residual)}};
  }
  fail(ErrorKind::InvalidParameter, "unknown command " + cmd);
}

// key/value lines; nested values as compact JSON
void print_table(const json& j, const std::string& prefix = "") {
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix + it.key();
    if (it->is_object()) {
      print_table(*it, key + ".");
      continue;
    }
    std::cout << key << std::string(width + 2 - std::min(width, it.key().size()), ' ')
              << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"asymkit: group asymmetry of quantum states"};
  app.require_subcommand(1, 1);
  app.add_option("--group", cfg.group, "group JSON file");
  app.add_option("--rep", cfg.reps, "rep JSON file (repeatable)");
  app.add_option("--state", cfg.states, "state JSON file (repeatable)");
  app.add_option("--func", cfg.func, "function JSON file");
  app.add_option("--channel", cfg.channel, "channel JSON file");
  app.add_option("--seed", cfg.seed, "seed for randomized decompositions");
  app.add_option("--tol", cfg.tol, "tolerance override");
  app.add_option("--format", cfg.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"group", "validate a group table"},
      {"decompose", "irrep decomposition of a rep"},
      {"charfunc", "characteristic function of a state"},
      {"reduce", "reduction onto irreps"},
      {"fourier", "reduction from a characteristic function"},
      {"uequiv", "unitary G-equivalence of two pure states"},
      {"equiv", "G-equivalence of two pure states"},
      {"u1shift", "shift equivalence of two weight distributions"},
      {"overlap", "optimal overlap under invariant unitaries"},
      {"bochner", "positive-definiteness of a function"},
      {"gns", "state and rep realizing a function"},
      {"covcheck", "G-covariance of a channel"},
      {"twirl", "group twirl of a channel"},
      {"embed", "endomorphic embedding of a channel"},
  };
  for (const auto& [name, help] : commands)
    app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    json out;
    out["command"] = cfg.command;
    out["seed"] = cfg.seed;
    out["result"] = run(cfg);
    if (cfg.format == "table")
      print_table(out);
    else
      std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NumericalDegeneracy ? kExitDegenerate : kExitValidation;
  } catch (const json::exception& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitValidation;
  }
}
