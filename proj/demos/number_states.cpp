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

// Two superpositions of photon-number states under Z_16 phase shifts:
// equivalent under covariant channels, not under invariant unitaries.

#include <cstdio>

#include "asymkit/asymkit.hpp"

using namespace asymkit;

int main() {
  const GroupPtr z16 = share(make_cyclic(16));
  const UnitaryRep number = number_rep(z16, 16);

  Vec a = Vec::Zero(16), b = Vec::Zero(16);
  a(0) = a(1) = b(2) = b(3) = 1.0;
  const QuantumState psi = QuantumState::pure_normalized(a);
  const QuantumState phi = QuantumState::pure_normalized(b);

  const EquivalenceVerdict v = decide_g_equivalence(psi, phi, number);
  std::printf("G-equivalence: %s\n", std::string(to_string(v.status)).c_str());
  if (v.one_dim_rep) {
    const cplx w = (*v.one_dim_rep)[1];
    std::printf("omega(1) = %.6f %+.6fi\n", w.real(), w.imag());
  }

  const IrrepDecomposition dec = decompose(number);
  const EquivalenceVerdict u = decide_unitary_g_equivalence(psi, phi, dec);
  std::printf("unitary G-equivalence: %s (reduction distance %.3f)\n",
              std::string(to_string(u.status)).c_str(), u.reduction_distance);

  const OverlapReport o = max_overlap(psi, phi, dec);
  std::printf("best overlap under invariant unitaries: %.6f\n", o.optimal);
}
