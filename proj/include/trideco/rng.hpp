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

#include <random>
#include <vector>

#include "trideco/field.hpp"

namespace trideco {

/// Counters for the Las Vegas loops driven by one Rng.
struct RetryStats {
  std::size_t loops = 0;         // completed or abandoned loops
  std::size_t attempts = 0;      // total attempts over all loops
  std::size_t max_attempts = 0;  // worst single loop
  std::size_t exhausted = 0;     // loops that ran out of budget

  double mean() const { return loops ? static_cast<double>(attempts) / static_cast<double>(loops) : 0.0; }
  void merge(const RetryStats& o);
};

/// Seeded deterministic stream; the same seed gives the same draws on
/// every platform (rejection sampling on top of mt19937_64).
class Rng {
 public:
  static constexpr std::size_t kDefaultRetries = 64;

  explicit Rng(u64 seed = 0, std::size_t max_retries = kDefaultRetries)
      : gen_(seed), max_retries_(max_retries == 0 ? 1 : max_retries) {}

  /// Uniform in [0, bound), bound >= 1.
  u64 below(u64 bound);

  std::size_t max_retries() const { return max_retries_; }
  const RetryStats& stats() const { return stats_; }
  /// Records one finished loop that used `attempts` tries.
  void record(std::size_t attempts, bool exhausted);

 private:
  std::mt19937_64 gen_;
  std::size_t max_retries_;
  RetryStats stats_;
};

/// n coefficients drawn from {0, ..., delta^2 - 1}; the last one is 1 when
/// fix_last is set. Throws CharacteristicTooSmall unless p > delta^2.
std::vector<u64> random_form(const PrimeField& F, std::size_t n, std::size_t delta, Rng& rng,
                             bool fix_last = false);

}  // namespace trideco
