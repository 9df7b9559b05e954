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

#include "trideco/rng.hpp"

#include <algorithm>
#include <limits>

#include "trideco/error.hpp"

namespace trideco {

void RetryStats::merge(const RetryStats& o) {
  loops += o.loops;
  attempts += o.attempts;
  max_attempts = std::max(max_attempts, o.max_attempts);
  exhausted += o.exhausted;
}

u64 Rng::below(u64 bound) {
  if (bound <= 1) return 0;
  const u64 max = std::numeric_limits<u64>::max();
  const u64 limit = max - (max % bound + 1) % bound;
  u64 x;
  do {
    x = gen_();
  } while (x > limit);
  return x % bound;
}

void Rng::record(std::size_t attempts, bool exhausted) {
  ++stats_.loops;
  stats_.attempts += attempts;
  stats_.max_attempts = std::max(stats_.max_attempts, attempts);
  if (exhausted) ++stats_.exhausted;
}

std::vector<u64> random_form(const PrimeField& F, std::size_t n, std::size_t delta, Rng& rng,
                             bool fix_last) {
  const u128 sq = static_cast<u128>(delta) * delta;
  if (static_cast<u128>(F.p()) <= sq) raise(Errc::CharacteristicTooSmall, "need p > delta^2");
  std::vector<u64> mu(n);
  for (auto& c : mu) c = rng.below(static_cast<u64>(sq));
  if (fix_last && n > 0) mu.back() = 1;
  return mu;
}

}  // namespace trideco
