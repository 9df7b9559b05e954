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

#include <string>
#include <vector>

#include "trideco/poly.hpp"

namespace trideco {

/// Element of R_T on the monomial basis, X1 fastest.
using ResidueElement = std::vector<u64>;
/// Linear form R_T -> F_p given by its values on the monomial basis.
using LinearForm = std::vector<u64>;

/// Monic, reduced, zero-dimensional triangular set T1(X1), ..., Tn(X1..Xn).
///
/// polys[i] is a dense tensor of (d[i] + 1) * delta_below(i) entries: the
/// coefficient of Xi^a occupies [a * delta_below(i), (a + 1) * delta_below(i))
/// and is itself an element of R_{T1..T(i-1)}. The leading slot is 1.
struct TriangularSet {
  PrimeField F{2};
  std::vector<std::string> vars;
  std::vector<std::size_t> d;
  std::vector<std::vector<u64>> polys;

  std::size_t n() const { return d.size(); }
  std::size_t delta() const { return delta_below(n()); }
  std::size_t delta_below(std::size_t i) const {
    std::size_t r = 1;
    for (std::size_t j = 0; j < i; ++j) r *= d[j];
    return r;
  }
  /// Coefficient of Xi^a in Ti (0-based i), an element of R_{<i}.
  std::vector<u64> coeff(std::size_t i, std::size_t a) const;

  bool operator==(const TriangularSet& o) const {
    return F == o.F && vars == o.vars && d == o.d && polys == o.polys;
  }
};

/// Checks shape, monicity and reducedness; throws InvalidArgument.
void validate(const TriangularSet& T);

/// Builds T from per-level coefficient lists: coeffs[i][a] is the coefficient
/// of Xi^a (an element of R_{<i}, padded or exact length delta_below(i)).
TriangularSet make_triset(const PrimeField& F, std::vector<std::string> vars,
                          const std::vector<std::vector<std::vector<u64>>>& coeffs);

TriangularSet univariate_triset(const PrimeField& F, const Poly& P,
                                std::string var = "X1");

/// The first k polynomials of T.
TriangularSet prefix(const TriangularSet& T, std::size_t k);

/// Default variable names X1..Xn.
std::vector<std::string> default_vars(std::size_t n);

/// Sparse multivariate polynomial; exponent vectors may be shorter than n.
struct RawPoly {
  struct Term {
    std::vector<u32> exps;
    u64 c;
  };
  std::vector<Term> terms;
};

/// Normal form modulo T. Throws VariableNotInRing if a term uses a
/// variable beyond T's n.
ResidueElement reduce(const RawPoly& a, const TriangularSet& T);

/// Normal form of a dense tensor with per-variable extents `shape`
/// (shape.size() <= n; missing trailing variables have extent 1).
ResidueElement reduce_dense(const TriangularSet& T, const std::vector<u64>& a,
                            const std::vector<std::size_t>& shape);

/// Product in R_{T1..Tk} for any k <= n by dense product and division;
/// no arity restriction (used for checks and for n > 2 towers).
ResidueElement tower_mul(const TriangularSet& T, std::size_t k,
                         const ResidueElement& a, const ResidueElement& b);

/// Basis element X1^a1 ... Xk^ak of R_{<=k} as a vector.
ResidueElement basis_monomial(const TriangularSet& T, std::size_t k,
                              const std::vector<std::size_t>& exps);
ResidueElement one_element(const TriangularSet& T);

u64 apply_form(const PrimeField& F, const LinearForm& l, const ResidueElement& a);

/// Element <-> univariate polynomial for n = 1 rings of degree delta.
ResidueElement to_element(const Poly& a, std::size_t delta);
Poly to_poly(const ResidueElement& a);

/// Value of an element of R_{<=k} at a point (first k coordinates used).
u64 eval_element(const TriangularSet& T, std::size_t k, const ResidueElement& a,
                 const std::vector<u64>& pt);

}  // namespace trideco
