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

#include "trideco/poly.hpp"

#include <algorithm>

#include "ntt.hpp"
#include "trideco/error.hpp"

namespace trideco {
namespace {

constexpr std::size_t kMulCrossover = 32;
constexpr int kDivCrossover = 64;

}  // namespace

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_const(const PrimeField& F, u64 c) {
  Poly r{F.reduce(c)};
  normalize(r);
  return r;
}

Poly poly_x(const PrimeField&) { return Poly{0, 1}; }

Poly poly_linear(const PrimeField& F, u64 c) { return Poly{F.neg(c), 1}; }

Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(a, i), coeff(b, i));
  normalize(r);
  return r;
}

Poly sub(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(a, i), coeff(b, i));
  normalize(r);
  return r;
}

Poly neg(const PrimeField& F, const Poly& a) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
  return r;
}

Poly scale(const PrimeField& F, const Poly& a, u64 c) {
  if (c == 0) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.empty()) return {};
  Poly r(a.size() + k, 0);
  std::copy(a.begin(), a.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

Poly truncate(const Poly& a, std::size_t n) {
  Poly r(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(n, a.size())));
  normalize(r);
  return r;
}

Poly monic(const PrimeField& F, const Poly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly derivative(const PrimeField& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.reduce(i));
  normalize(r);
  return r;
}

u64 eval(const PrimeField& F, const Poly& a, u64 x) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

Poly rev(const Poly& a, std::size_t d) {
  Poly r(d + 1, 0);
  for (std::size_t i = 0; i <= d && i < a.size(); ++i) r[d - i] = a[i];
  normalize(r);
  return r;
}

Poly schoolbook_mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const u64 p = F.p();
  Poly r(a.size() + b.size() - 1);
  if (p < (u64{1} << 31)) {
    // Products fit in 62 bits; accumulate exactly and reduce once.
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
      std::size_t hi = std::min(k, a.size() - 1);
      u128 acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
      r[k] = static_cast<u64>(acc % p);
    }
  } else {
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
      std::size_t hi = std::min(k, a.size() - 1);
      u64 acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc = F.add(acc, F.mul(a[i], b[k - i]));
      r[k] = acc;
    }
  }
  normalize(r);
  return r;
}

Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kMulCrossover) return schoolbook_mul(F, a, b);
  return detail::ntt_multiply(F, a.data(), a.size(), b.data(), b.size());
}

Poly mul_trunc(const PrimeField& F, const Poly& a, const Poly& b,
               std::size_t n) {
  Poly x = truncate(a, n), y = truncate(b, n);
  return truncate(poly_mul(F, x, y), n);
}

Poly series_inv(const PrimeField& F, const Poly& a, std::size_t n) {
  if (n == 0) return {};
  if (a.empty() || a[0] == 0) raise(Errc::ZeroDivisor, "series with zero constant term");
  Poly g{F.inv(a[0])};
  std::size_t len = 1;
  while (len < n) {
    len = std::min(2 * len, n);
    // g <- g (2 - a g) mod X^len
    Poly ag = mul_trunc(F, a, g, len);
    Poly t = neg(F, ag);
    if (t.empty()) t.push_back(0);
    t[0] = F.add(t[0], 2 % F.p());
    normalize(t);
    g = mul_trunc(F, g, t, len);
  }
  return g;
}

std::pair<Poly, Poly> poly_divrem(const PrimeField& F, const Poly& a,
                                  const Poly& b) {
  if (b.empty()) raise(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (a.size() < b.size()) return {Poly{}, a};
  const int da = deg(a), db = deg(b);
  if (db < kDivCrossover || da - db < kDivCrossover) {
    Poly r = a;
    Poly q(static_cast<std::size_t>(da - db + 1), 0);
    u64 lc_inv = F.inv(b.back());
    for (int i = da - db; i >= 0; --i) {
      u64 c = F.mul(r[static_cast<std::size_t>(i + db)], lc_inv);
      q[static_cast<std::size_t>(i)] = c;
      if (c == 0) continue;
      u64 nc = F.neg(c);
      for (int j = 0; j <= db; ++j) {
        std::size_t k = static_cast<std::size_t>(i + j);
        r[k] = F.add(r[k], F.mul(nc, b[static_cast<std::size_t>(j)]));
      }
    }
    r.resize(static_cast<std::size_t>(db));
    normalize(r);
    normalize(q);
    return {q, r};
  }
  // Newton division: rev(q) = rev(a) / rev(b) mod X^(da-db+1).
  std::size_t m = static_cast<std::size_t>(da - db + 1);
  Poly rb = rev(b, static_cast<std::size_t>(db));
  Poly ra = rev(a, static_cast<std::size_t>(da));
  Poly rq = mul_trunc(F, ra, series_inv(F, rb, m), m);
  Poly q = rev(rq, m - 1);
  Poly r = sub(F, a, poly_mul(F, q, b));
  return {q, r};
}

Poly poly_rem(const PrimeField& F, const Poly& a, const Poly& b) {
  return poly_divrem(F, a, b).second;
}

Poly poly_quo(const PrimeField& F, const Poly& a, const Poly& b) {
  return poly_divrem(F, a, b).first;
}

Poly poly_gcd(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() && b.empty()) raise(Errc::BothZero, "gcd(0, 0)");
  Poly x = a, y = b;
  while (!y.empty()) {
    Poly r = poly_rem(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

Xgcd poly_xgcd(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() && b.empty()) raise(Errc::BothZero, "xgcd(0, 0)");
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divrem(F, r0, r1);
    Poly s2 = sub(F, s0, poly_mul(F, q, s1));
    Poly t2 = sub(F, t0, poly_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 c = F.inv(r0.back());
  return {scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)};
}

Poly mulmod(const PrimeField& F, const Poly& a, const Poly& b, const Poly& m) {
  return poly_rem(F, poly_mul(F, a, b), m);
}

Poly invmod(const PrimeField& F, const Poly& a, const Poly& m) {
  if (deg(m) == 0) return {};
  Poly ar = poly_rem(F, a, m);
  if (ar.empty()) raise(Errc::ZeroDivisor, "zero is not invertible modulo m");
  Xgcd x = poly_xgcd(F, ar, m);
  if (!is_one(x.g)) raise(Errc::ZeroDivisor, "element shares a factor with the modulus");
  return poly_rem(F, x.u, m);
}

Poly series_log(const PrimeField& F, const Poly& a, std::size_t n) {
  if (n == 0) return {};
  if (a.empty() || a[0] != 1) raise(Errc::InvalidArgument, "log needs constant term 1");
  if (n > F.p()) raise(Errc::CharacteristicTooSmall, "log needs n <= p");
  Poly q = mul_trunc(F, derivative(F, a), series_inv(F, a, n - 1), n - 1);
  Poly r(n, 0);
  for (std::size_t i = 0; i + 1 < n && i < q.size(); ++i)
    r[i + 1] = F.mul(q[i], F.inv(F.reduce(i + 1)));
  normalize(r);
  return r;
}

Poly series_exp(const PrimeField& F, const Poly& h, std::size_t n) {
  if (n == 0) return {};
  if (!h.empty() && h[0] != 0) raise(Errc::InvalidArgument, "exp needs zero constant term");
  Poly g{1};
  std::size_t len = 1;
  while (len < n) {
    len = std::min(2 * len, n);
    // g <- g (1 - log g + h) mod X^len
    Poly t = sub(F, truncate(h, len), series_log(F, g, len));
    if (t.empty()) t.push_back(0);
    t[0] = F.add(t[0], 1);
    normalize(t);
    g = mul_trunc(F, g, t, len);
  }
  return g;
}

bool is_squarefree(const PrimeField& F, const Poly& a) {
  if (deg(a) <= 0) return true;
  return deg(poly_gcd(F, a, derivative(F, a))) == 0;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const PrimeField& F,
                                                           const Poly& a) {
  if (a.empty()) raise(Errc::InvalidArgument, "squarefree decomposition of zero");
  if (static_cast<u64>(deg(a)) >= F.p()) {
    raise(Errc::DegreeExceedsCharacteristic, "degree must be below p");
  }
  std::vector<std::pair<Poly, int>> out;
  Poly am = monic(F, a);
  if (deg(am) == 0) return out;
  Poly b = derivative(F, am);
  Poly c = poly_gcd(F, am, b);
  Poly w = poly_quo(F, am, c);
  Poly y = poly_quo(F, b, c);
  Poly z = sub(F, y, derivative(F, w));
  for (int i = 1; deg(w) > 0; ++i) {
    Poly g = poly_gcd(F, w, z);
    w = poly_quo(F, w, g);
    y = poly_quo(F, z, g);
    z = sub(F, y, derivative(F, w));
    if (deg(g) > 0) out.emplace_back(std::move(g), i);
  }
  return out;
}

Poly from_roots(const PrimeField& F, const std::vector<u64>& roots) {
  if (roots.empty()) return Poly{1};
  std::vector<Poly> layer;
  layer.reserve(roots.size());
  for (u64 r : roots) layer.push_back(poly_linear(F, r));
  while (layer.size() > 1) {
    std::vector<Poly> next;
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2)
      next.push_back(poly_mul(F, layer[i], layer[i + 1]));
    if (layer.size() % 2) next.push_back(layer.back());
    layer = std::move(next);
  }
  return layer[0];
}

Modulus::Modulus(const PrimeField& F, Poly m) : m_(std::move(m)) {
  if (m_.empty()) raise(Errc::DivisionByZeroPoly, "zero modulus");
  m_ = monic(F, m_);
  int d = deg(m_);
  if (d >= kDivCrossover) rinv_ = series_inv(F, rev(m_, static_cast<std::size_t>(d)),
                                             static_cast<std::size_t>(d - 1));
}

Poly Modulus::rem(const PrimeField& F, const Poly& a) const {
  int d = deg(m_);
  if (deg(a) < d) return a;
  if (rinv_.empty() || deg(a) > 2 * d - 2) return poly_rem(F, a, m_);
  std::size_t k = static_cast<std::size_t>(deg(a) - d + 1);
  Poly ra = rev(a, static_cast<std::size_t>(deg(a)));
  Poly q = rev(mul_trunc(F, ra, rinv_, k), k - 1);
  Poly r = sub(F, truncate(a, static_cast<std::size_t>(d)),
               truncate(poly_mul(F, q, m_), static_cast<std::size_t>(d)));
  return r;
}

}  // namespace trideco
