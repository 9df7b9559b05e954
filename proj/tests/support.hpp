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

// Small reference routines shared by the test binaries. They are written
// independently of the library code paths they check.

#pragma once

#include <random>
#include <vector>

#include "trideco/error.hpp"
#include "trideco/triset.hpp"

namespace tt {

using trideco::Poly;
using trideco::PrimeField;
using trideco::u128;
using trideco::u64;

inline u64 rnd(std::mt19937_64& g, u64 p) { return g() % p; }

inline Poly random_poly(std::mt19937_64& g, const PrimeField& F, int d) {
  Poly a(static_cast<std::size_t>(d + 1));
  for (auto& c : a) c = rnd(g, F.p());
  if (a.back() == 0) a.back() = 1;
  return a;
}

inline Poly random_monic(std::mt19937_64& g, const PrimeField& F, int d) {
  Poly a = random_poly(g, F, d);
  a.back() = 1;
  return a;
}

inline Poly ref_mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<u64>((static_cast<u128>(a[i]) * b[j] + r[i + j]) % F.p());
  trideco::normalize(r);
  return r;
}

// Long division, one leading term at a time.
inline std::pair<Poly, Poly> ref_divrem(const PrimeField& F, Poly a, const Poly& b) {
  Poly q;
  u64 li = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t s = a.size() - b.size();
    u64 c = F.mul(a.back(), li);
    if (q.size() < s + 1) q.resize(s + 1, 0);
    q[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = F.sub(a[s + j], F.mul(c, b[j]));
    trideco::normalize(a);
  }
  return {q, a};
}

inline Poly ref_from_roots(const PrimeField& F, const std::vector<u64>& roots) {
  Poly r{1};
  for (u64 x : roots) r = ref_mul(F, r, Poly{F.neg(x), 1});
  return r;
}

inline std::vector<u64> distinct(std::mt19937_64& g, u64 p, std::size_t k) {
  std::vector<u64> out;
  while (out.size() < k) {
    u64 x = g() % p;
    bool dup = false;
    for (u64 y : out) dup = dup || y == x;
    if (!dup) out.push_back(x);
  }
  return out;
}

template <class Fn>
trideco::Errc errc_of(Fn&& fn) {
  try {
    fn();
  } catch (const trideco::Error& e) {
    return e.code();
  }
  return trideco::Errc::InvalidArgument;
}

using trideco::ResidueElement;
using trideco::TriangularSet;

// Bivariate element as d2 polynomials in X1.
using Biv = std::vector<Poly>;

inline Poly ref_rem(const PrimeField& F, const Poly& a, const Poly& m) {
  return ref_divrem(F, a, m).second;
}

// Reduces a bivariate dense array (rows indexed by the X2 power) by T1 then
// by the monic T2 over F[X1]/T1, one leading term at a time.
inline Biv ref_biv_reduce(const PrimeField& F, Biv a, const Poly& T1, const Biv& T2) {
  for (auto& r : a) r = ref_rem(F, r, T1);
  const std::size_t d2 = T2.size() - 1;
  for (std::size_t s = a.size(); s-- > d2;) {
    Poly c = a[s];
    for (std::size_t j = 0; j <= d2; ++j) {
      Poly t = ref_rem(F, ref_mul(F, c, T2[j]), T1);
      Poly& dst = a[s - d2 + j];
      dst.resize(std::max(dst.size(), t.size()), 0);
      for (std::size_t k = 0; k < t.size(); ++k) dst[k] = F.sub(dst[k], t[k]);
      trideco::normalize(dst);
    }
  }
  a.resize(d2);
  return a;
}

inline Biv to_biv(const ResidueElement& e, std::size_t d1, std::size_t d2) {
  Biv b(d2);
  for (std::size_t k = 0; k < d2; ++k) {
    b[k].assign(e.begin() + static_cast<std::ptrdiff_t>(k * d1),
                e.begin() + static_cast<std::ptrdiff_t>((k + 1) * d1));
    trideco::normalize(b[k]);
  }
  return b;
}

inline ResidueElement from_biv(const Biv& b, std::size_t d1, std::size_t d2) {
  ResidueElement e(d1 * d2, 0);
  for (std::size_t k = 0; k < std::min(d2, b.size()); ++k)
    for (std::size_t j = 0; j < b[k].size(); ++j) e[k * d1 + j] = b[k][j];
  return e;
}

inline Biv ref_biv_mul(const PrimeField& F, const Biv& a, const Biv& b) {
  Biv c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Poly t = ref_mul(F, a[i], b[j]);
      Poly& dst = c[i + j];
      dst.resize(std::max(dst.size(), t.size()), 0);
      for (std::size_t k = 0; k < t.size(); ++k) dst[k] = F.add(dst[k], t[k]);
      trideco::normalize(dst);
    }
  return c;
}

inline ResidueElement random_element(std::mt19937_64& g, const PrimeField& F, std::size_t n) {
  ResidueElement e(n);
  for (auto& x : e) x = rnd(g, F.p());
  return e;
}

inline TriangularSet random_biv_triset(std::mt19937_64& g, const PrimeField& F,
                                       std::size_t d1, std::size_t d2) {
  std::vector<std::vector<std::vector<u64>>> c(2);
  Poly T1 = random_monic(g, F, static_cast<int>(d1));
  for (auto x : T1) c[0].push_back({x});
  for (std::size_t k = 0; k < d2; ++k) c[1].push_back(random_element(g, F, d1));
  c[1].push_back({1});
  return trideco::make_triset(F, {"X1", "X2"}, c);
}

// T1 = prod (X1 - a_i), T2 = prod_k (X2 - g_k(X1)) mod T1. The points are
// (a_i, g_k(a_i)).
inline TriangularSet split_biv_triset(std::mt19937_64& g, const PrimeField& F,
                                      std::size_t d1, std::size_t d2,
                                      std::vector<std::vector<u64>>& points) {
  std::vector<u64> a = distinct(g, F.p(), d1);
  Poly T1 = ref_from_roots(F, a);
  std::vector<Poly> gk(d2);
  for (auto& q : gk) {
    q.resize(d1);
    for (auto& x : q) x = rnd(g, F.p());
    trideco::normalize(q);
  }
  Biv T2{Poly{1}};
  for (const auto& q : gk) {
    Biv lin{trideco::neg(F, q), Poly{1}};
    T2 = ref_biv_mul(F, T2, lin);
    for (auto& r : T2) r = ref_rem(F, r, T1);
  }
  points.clear();
  for (u64 x : a)
    for (const auto& q : gk) points.push_back({x, trideco::eval(F, q, x)});
  std::vector<std::vector<std::vector<u64>>> c(2);
  for (auto x : T1) c[0].push_back({x});
  for (auto& r : T2) c[1].push_back(std::vector<u64>(r.begin(), r.end()));
  return trideco::make_triset(F, {"X1", "X2"}, c);
}

inline Biv biv_of_triset(const TriangularSet& T) {
  Biv b(T.d[1] + 1);
  for (std::size_t k = 0; k <= T.d[1]; ++k) {
    b[k] = T.coeff(1, k);
    trideco::normalize(b[k]);
  }
  return b;
}

inline Poly t1_of(const TriangularSet& T) {
  Poly p = T.polys[0];
  trideco::normalize(p);
  return p;
}

}  // namespace tt
