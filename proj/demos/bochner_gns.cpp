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

// Positive-definiteness of functions on S_3 and the rep they generate.

#include <cstdio>

#include "asymkit/asymkit.hpp"

using namespace asymkit;

int main() {
  const GroupPtr s3 = share(make_symmetric(3));
  const IrrepDecomposition regular = decompose(regular_rep(s3));

  // characteristic function of a random state in the regular rep
  Rng rng(11);
  const UnitaryRep reg = regular_rep(s3);
  const CharFunction chi = charfunc(QuantumState::pure(random_unit_vector(6, rng)), reg);
  const PositiveDefiniteReport ok = is_positive_definite(chi, regular);
  std::printf("charfunc: positive definite %d, min eigenvalue %.3e\n",
              ok.positive_definite, ok.min_eigenvalue);

  const GnsResult gns = gns_construct(chi);
  std::printf("GNS rep dimension %d (group order %d)\n", gns.dim, s3->order());

  CharFunction bad = chi;
  bad[1] = -1.5;
  const PositiveDefiniteReport no = is_positive_definite(bad, regular);
  std::printf("perturbed: positive definite %d, min eigenvalue %.3f at irrep %d\n",
              no.positive_definite, no.min_eigenvalue, no.min_label);
}
