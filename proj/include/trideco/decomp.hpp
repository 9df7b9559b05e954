// Copyright 2026 The Trideco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "trideco/urep.hpp"

namespace trideco {

/// pi_m: keep the first m coordinates.
struct Projection {
  std::size_t m = 1;
};

struct FiberPart {
  std::size_t r = 0;  // fiber cardinality
  UnivariateRep u;
};

struct FiberSplit {
  std::vector<FiberPart> parts;  // r strictly increasing
  std::vector<u64> mu;
};

/// Per-level bookkeeping of the gcd descent, for checking.
struct DescentTrace {
  std::vector<std::size_t> sum_deg_K;      // sum of node degrees per level
  std::vector<std::size_t> sum_deg_gamma;  // sum of gamma degrees per level
  std::vector<Poly> leaves;                // leaf gammas, one per C_k
  std::vector<std::pair<Poly, int>> factors;  // chi_N = prod C_k^r_k
  Poly N;                                     // sum nu_i U_i mod P
};

/// Monic gcd(A(N) mod Q, Q).
Poly gamma(const Poly& A, const Poly& Q, const Poly& N_mod_Q, const PrimeField& F);

/// Splits V(u) by the cardinality of the pi_m fibers through each point.
/// Throws CharacteristicTooSmall and RetryBudgetExhausted.
FiberSplit phi_split(const UnivariateRep& u, Projection phi, Rng& rng,
                     DescentTrace* trace = nullptr);

/// Equiprojectable decomposition as univariate representations, in the
/// coordinates of u. `order` lists u's coordinates from smallest variable.
std::vector<UnivariateRep> equi_split(const UnivariateRep& u, const std::vector<std::size_t>& order,
                                      Rng& rng);

struct Decomposition {
  std::vector<TriangularSet> components;  // sorted by (delta, coefficients)
  std::vector<std::size_t> order;
  std::vector<ConversionReceipt> receipts;
  UnivariateRep source;               // the u it was computed from
  std::vector<Poly> moduli;            // P_k of each component's part
};

Decomposition decompose_to_trisets(const UnivariateRep& u, const std::vector<std::size_t>& order,
                                   Rng& rng);

/// K[X]/<P> -> prod R_{T(j)} and back. Throw StaleConversionData unless d
/// was computed from u.
std::vector<ResidueElement> split_element(const Poly& a, const UnivariateRep& u,
                                          const Decomposition& d);
Poly combine_elements(const std::vector<ResidueElement>& parts, const UnivariateRep& u,
                      const Decomposition& d);

}  // namespace trideco
