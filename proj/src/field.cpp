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

#include "trideco/field.hpp"

#include "trideco/error.hpp"

namespace trideco {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BothZero: return "BothZero";
    case Errc::DegreeExceedsCharacteristic: return "DegreeExceedsCharacteristic";
    case Errc::EmptyLeafSet: return "EmptyLeafSet";
    case Errc::NonCoprimeModuli: return "NonCoprimeModuli";
    case Errc::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::VariableNotInRing: return "VariableNotInRing";
    case Errc::UnsupportedArity: return "UnsupportedArity";
    case Errc::BoundsExceedRingDegree: return "BoundsExceedRingDegree";
    case Errc::NotSeparating: return "NotSeparating";
    case Errc::NotInSubalgebra: return "NotInSubalgebra";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::RetryBudgetExhausted: return "RetryBudgetExhausted";
    case Errc::RadicalitySuspect: return "RadicalitySuspect";
    case Errc::NotEquiprojectable: return "NotEquiprojectable";
    case Errc::StaleConversionData: return "StaleConversionData";
    case Errc::MalformedResultChain: return "MalformedResultChain";
    case Errc::NotSplit: return "NotSplit";
  }
  return "Unknown";
}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (u64 a : kSmall) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 p) : p_(p), two_adic_(0) {
  if (p < 2 || p >= (u64{1} << 63)) {
    raise(Errc::InvalidArgument, "modulus out of range [2, 2^63)");
  }
  if (!is_prime_u64(p)) raise(Errc::InvalidArgument, "modulus is not prime");
  u64 t = p - 1;
  while (t != 0 && (t & 1) == 0) {
    t >>= 1;
    ++two_adic_;
  }
}

u64 PrimeField::pow(u64 a, u64 e) const noexcept {
  u64 r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 PrimeField::inv(u64 a) const {
  if (a == 0) raise(Errc::ZeroDivisor, "inverse of zero in F_p");
  // Extended Euclid on signed 64-bit values; p < 2^63 keeps them in range.
  i64 r0 = static_cast<i64>(p_), r1 = static_cast<i64>(a);
  i64 s0 = 0, s1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

}  // namespace trideco
