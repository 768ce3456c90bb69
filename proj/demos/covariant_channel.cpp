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

// Twirling a random channel over Z_4 and embedding it as an endomorphism.

#include <cstdio>

#include "asymkit/asymkit.hpp"

using namespace asymkit;

int main() {
  const GroupPtr z4 = share(make_cyclic(4));
  const UnitaryRep number = number_rep(z4, 3);

  Rng rng(5);
  // random isometry C^3 -> C^3 (x) C^3, cut into three Kraus operators
  const Mat iso = haar_unitary(9, rng).leftCols(3);
  const QuantumChannel c(3, 3, {iso.topRows(3), iso.middleRows(3, 3), iso.bottomRows(3)});
  std::printf("random channel covariant: %d\n", is_g_covariant(c, number, number).covariant);

  const QuantumChannel t = twirl_channel(c, number);
  const CovarianceCheck chk = is_g_covariant(t, number, number);
  std::printf("twirled channel covariant: %d (residual %.1e)\n", chk.covariant, chk.residual);

  const UnitaryRep out = weight_rep(z4, {0, 1, 2});
  const UnitaryRep sum = direct_sum_rep(number, out);
  const QuantumChannel e = embed_channel(t, number, out);
  std::printf("embedded on dimension %d, covariant: %d\n", e.d_in(),
              is_g_covariant(e, sum, sum).covariant);
}
