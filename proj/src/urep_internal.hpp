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

#include <optional>

#include "trideco/kernels.hpp"
#include "trideco/urep.hpp"

namespace trideco::detail {

/// K[Z]/<P> as a one-variable ring.
inline Ring univariate_ring(const PrimeField& F, const Poly& P) {
  return Ring(univariate_triset(F, P, "Z"));
}

/// U with B = U(A) in R, checked by one composition; nullopt when the
/// check fails. chi is the characteristic polynomial of A.
inline std::optional<Poly> recover(const Ring& R, const ResidueElement& A, const Poly& chi,
                                   const ResidueElement& B) {
  Poly U = generalized_inverse(A, B, R, chi);
  if (compose_any(U, A, R) != B) return std::nullopt;
  return U;
}

/// sum c_i a_i mod P for polynomials of degree < deg P.
inline Poly linear_combination(const PrimeField& F, const std::vector<u64>& c,
                               const std::vector<Poly>& a) {
  Poly r;
  for (std::size_t i = 0; i < c.size(); ++i) r = add(F, r, scale(F, a[i], c[i]));
  return r;
}

}  // namespace trideco::detail
