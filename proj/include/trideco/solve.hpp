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

#include "trideco/decomp.hpp"

namespace trideco {

/// Union of V(plus) minus union of V(minus). Every input uses the same
/// field and the same variable list (the source order); target_order
/// indexes into that list, smallest variable first.
struct P1Problem {
  std::vector<TriangularSet> plus;
  std::vector<TriangularSet> minus;
  std::vector<std::size_t> target_order;
};

struct P2Answer {
  Decomposition on_zero;
  Decomposition off_zero;
  std::vector<ResidueElement> inverses;  // aligned with off_zero.components
};

/// Throws CharacteristicTooSmall, RadicalitySuspect, RetryBudgetExhausted.
Decomposition solve_p1(const P1Problem& problem, Rng& rng);

/// Splits V(T) along the zero set of F and inverts F off it.
P2Answer solve_p2(const TriangularSet& T, const ResidueElement& F,
                  const std::vector<std::size_t>& target_order, Rng& rng);

}  // namespace trideco
