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

#include <cstdint>

namespace trideco {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) noexcept;

/// Arithmetic in F_p for a word-size prime 2 <= p < 2^63.
/// Elements are plain u64 values in [0, p).
class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 p() const noexcept { return p_; }
  /// Largest k with 2^k | p - 1.
  int two_adicity() const noexcept { return two_adic_; }
  bool small() const noexcept { return p_ < (u64{1} << 32); }

  u64 reduce(u64 a) const noexcept { return a % p_; }
  u64 from_int(i64 v) const noexcept {
    i64 r = v % static_cast<i64>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
  }
  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    if (small()) return (a * b) % p_;
    return static_cast<u64>((static_cast<u128>(a) * b) % p_);
  }
  u64 pow(u64 a, u64 e) const noexcept;
  /// Inverse of a nonzero element; throws ZeroDivisor on 0.
  u64 inv(u64 a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  u64 p_;
  int two_adic_;
};

}  // namespace trideco
