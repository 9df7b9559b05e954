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

// Modular composition and power projection rebuilt from decompositions.
// Slow on purpose: these exist to cross-check the kernels.

#pragma once

#include <vector>

#include "trideco/solve.hpp"

namespace trideco {

/// F(G) mod T by two decompositions. T has one or two variables.
/// Throws MalformedResultChain if the final chain has the wrong shape.
ResidueElement modcomp_via_decomposition(const Poly& F, const ResidueElement& G,
                                         const TriangularSet& T, Rng& rng);

/// A with l = A * tau on K[X]/<F>; G_inv = F'^-1 mod F.
Poly form_to_trace_multiplier(const LinearForm& l, const Poly& F, const Poly& G_inv,
                              const PrimeField& K);

/// A with l = A * tr on R_T. Throws ZeroDivisor on a non-invertible
/// derivative.
ResidueElement form_to_trace_multiplier_bivariate(const LinearForm& l, const TriangularSet& T);

/// Per-component data of powproj_via_decomposition.
struct DualityTrace {
  std::vector<Poly> R;                  // minimal polynomials R_i(Z)
  std::vector<u64> trace_of_one;        // tau_i(1)
  std::vector<std::vector<u64>> ell;    // ell_i(Z^j), j < deg R_i
  ResidueElement A;                     // the trace multiplier of l
};

/// [l(G^c)] for c < f.
std::vector<u64> powproj_via_decomposition(const LinearForm& l, const ResidueElement& G,
                                           const TriangularSet& T, std::size_t f, Rng& rng,
                                           DualityTrace* trace = nullptr);

/// T with the dummy level X2 appended when n = 1.
TriangularSet lift_bivariate(const TriangularSet& T);

}  // namespace trideco
