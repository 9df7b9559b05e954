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

#include "trideco/poly.hpp"

namespace trideco {

/// Binary product tree over a family of monic polynomials. levels[0] holds
/// the root, levels[w] the leaves, padded to 2^w with constant 1.
struct SubproductTree {
  std::vector<std::vector<Poly>> levels;
  std::size_t leaf_count = 0;  // before padding

  const Poly& root() const { return levels.front().front(); }
  std::size_t depth() const { return levels.size() - 1; }
};

SubproductTree build_subproduct_tree(const PrimeField& F,
                                     const std::vector<Poly>& leaves);

/// Entry i is a mod moduli[i].
std::vector<Poly> multi_reduce(const PrimeField& F, const Poly& a,
                               const std::vector<Poly>& moduli);
std::vector<Poly> multi_reduce(const PrimeField& F, const Poly& a,
                               const SubproductTree& tree);

/// The unique polynomial of degree < sum deg(moduli) with the given residues.
Poly crt_combine(const PrimeField& F, const std::vector<Poly>& residues,
                 const std::vector<Poly>& moduli);

/// Monic degree-d polynomial with power sums s[0] = s_1, ..., s[d-1] = s_d.
Poly poly_from_power_sums(const PrimeField& F, const std::vector<u64>& s,
                          std::size_t d);

/// Power sums s_0..s_{n-1} of the roots of a monic polynomial.
std::vector<u64> power_sums(const PrimeField& F, const Poly& a, std::size_t n);

/// forms[i][j] = l_i(X^j mod R_i) for j < deg R_i. Returns the first e
/// values of sum_i l_i(X^j mod R_i).
std::vector<u64> transposed_multi_reduce(const PrimeField& F,
                                         const std::vector<std::vector<u64>>& forms,
                                         const std::vector<Poly>& moduli,
                                         std::size_t e);

}  // namespace trideco
