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

#include <cstddef>
#include <utility>
#include <vector>

#include "trideco/field.hpp"

namespace trideco {

/// Dense univariate polynomial; index i holds the coefficient of X^i.
/// Normalized: no trailing zeros, so the zero polynomial is empty.
using Poly = std::vector<u64>;

void normalize(Poly& a);
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }
inline u64 coeff(const Poly& a, std::size_t i) {
  return i < a.size() ? a[i] : 0;
}

Poly poly_const(const PrimeField& F, u64 c);
Poly poly_x(const PrimeField& F);
/// X - c
Poly poly_linear(const PrimeField& F, u64 c);

Poly add(const PrimeField& F, const Poly& a, const Poly& b);
Poly sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly neg(const PrimeField& F, const Poly& a);
Poly scale(const PrimeField& F, const Poly& a, u64 c);
Poly shift(const Poly& a, std::size_t k);  // a * X^k
Poly truncate(const Poly& a, std::size_t n);  // a mod X^n
Poly monic(const PrimeField& F, const Poly& a);
Poly derivative(const PrimeField& F, const Poly& a);
u64 eval(const PrimeField& F, const Poly& a, u64 x);

/// Coefficients of a read as a polynomial of formal degree d, reversed.
Poly rev(const Poly& a, std::size_t d);

/// Schoolbook product below the crossover, NTT above.
Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly mul_trunc(const PrimeField& F, const Poly& a, const Poly& b,
               std::size_t n);
Poly schoolbook_mul(const PrimeField& F, const Poly& a, const Poly& b);

std::pair<Poly, Poly> poly_divrem(const PrimeField& F, const Poly& a,
                                  const Poly& b);
Poly poly_rem(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_quo(const PrimeField& F, const Poly& a, const Poly& b);

/// Monic gcd. Throws BothZero if a = b = 0.
Poly poly_gcd(const PrimeField& F, const Poly& a, const Poly& b);

struct Xgcd {
  Poly g, u, v;  // u*a + v*b = g, g monic
};
Xgcd poly_xgcd(const PrimeField& F, const Poly& a, const Poly& b);

Poly mulmod(const PrimeField& F, const Poly& a, const Poly& b, const Poly& m);
/// Inverse of a modulo m; throws ZeroDivisor if gcd(a, m) != 1.
Poly invmod(const PrimeField& F, const Poly& a, const Poly& m);

/// Power series: all results are truncated mod X^n.
Poly series_inv(const PrimeField& F, const Poly& a, std::size_t n);
Poly series_log(const PrimeField& F, const Poly& a, std::size_t n);
Poly series_exp(const PrimeField& F, const Poly& h, std::size_t n);

/// Yun decomposition: a = prod C_k^{r_k}, r_k strictly increasing.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const PrimeField& F,
                                                           const Poly& a);
bool is_squarefree(const PrimeField& F, const Poly& a);

/// prod (X - r) over the given roots, by a balanced product tree.
Poly from_roots(const PrimeField& F, const std::vector<u64>& roots);

/// Precomputed remainder by a fixed monic modulus.
class Modulus {
 public:
  Modulus() = default;
  Modulus(const PrimeField& F, Poly m);
  const Poly& poly() const { return m_; }
  int degree() const { return deg(m_); }
  /// a mod m for deg(a) <= 2 deg(m) - 2; larger inputs fall back to divrem.
  Poly rem(const PrimeField& F, const Poly& a) const;

 private:
  Poly m_;
  Poly rinv_;  // 1 / rev(m) mod X^(deg m - 1)
};

}  // namespace trideco
