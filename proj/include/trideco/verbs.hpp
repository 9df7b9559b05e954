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

// Document-level operations behind the command-line verbs.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trideco/io.hpp"
#include "trideco/rng.hpp"

namespace trideco {

enum class Via { Kernel, Decomposition };

/// Decomposition of the union of the untagged (or `plus`) chains minus the
/// `minus` chains, under `order` (default: the file's order).
TriSetDoc verb_decompose(const TriSetDoc& in, const std::optional<std::string>& order, Rng& rng);

/// Same set, re-decomposed under `target`. `source`, when given, must
/// match the file's variable order.
TriSetDoc verb_change_order(const TriSetDoc& in, const std::optional<std::string>& source,
                            const std::string& target, Rng& rng);

/// One chain and operand F: chains tagged `zero` and `nonzero`, the latter
/// carrying the inverse of F.
TriSetDoc verb_quasi_inverse(const TriSetDoc& in, const std::optional<std::string>& target,
                             Rng& rng);

/// One chain with operands F (in Y, or Y1 and Y2), G (or G1 and G2) and
/// optional bounds f. Returns the result as an expression.
std::string verb_modcomp(const TriSetDoc& in, Via via, Rng& rng);

/// One chain with operands ell (values or `trace`), G (or G1, G2) and f.
std::string verb_powproj(const TriSetDoc& in, Via via, Rng& rng);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Small randomized comparisons of every module against the oracles,
/// `count` instances per check (half as many for the slow duality check).
std::vector<CheckResult> selfcheck(Rng& rng, std::size_t count = 10);

struct BenchCell {
  std::size_t delta = 0;
  double seconds = 0;
};

/// Times one operation (quasi-inverse, decompose, modcomp, powproj,
/// convert) on a random instance with multidegree (d, ..., d).
BenchCell bench_cell(const std::string& op, std::size_t n, std::size_t d, u64 prime, u64 seed);

}  // namespace trideco
