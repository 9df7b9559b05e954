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

#include "trideco/duality.hpp"

#include "trideco/error.hpp"
#include "trideco/ptree.hpp"

namespace trideco {
namespace {

using Coeffs = std::vector<std::vector<std::vector<u64>>>;

Coeffs coeffs_of(const TriangularSet& T) {
  Coeffs c(T.n());
  for (std::size_t i = 0; i < T.n(); ++i)
    for (std::size_t a = 0; a <= T.d[i]; ++a) c[i].push_back(T.coeff(i, a));
  return c;
}

// Inserts the level X - v at position pos. v is an element of R_{<pos};
// later levels keep their layout because the new degree is 1.
TriangularSet insert_level(const TriangularSet& T, std::size_t pos, const std::string& var,
                           const ResidueElement& v) {
  Coeffs c = coeffs_of(T);
  std::vector<u64> nv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) nv[i] = T.F.neg(v[i]);
  std::vector<u64> one(v.size(), 0);
  one[0] = 1;
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(pos), {nv, one});
  std::vector<std::string> vars = T.vars;
  vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(pos), var);
  return make_triset(T.F, vars, c);
}

TriangularSet standard_names(TriangularSet T) {
  T.vars = default_vars(T.n());
  return T;
}

// Components of V(T) under `order`.
std::vector<TriangularSet> decompose(const TriangularSet& T, const std::vector<std::size_t>& order,
                                     Rng& rng) {
  return decompose_to_trisets(urep_from_triset(T, rng).urep, order, rng).components;
}

}  // namespace

TriangularSet lift_bivariate(const TriangularSet& T) {
  if (T.n() == 2) return T;
  if (T.n() != 1) raise(Errc::UnsupportedArity, "expected one or two variables");
  return insert_level(T, 1, T.vars[0] == "X2" ? "X2_" : "X2", ResidueElement(T.delta(), 0));
}

ResidueElement modcomp_via_decomposition(const Poly& Fp, const ResidueElement& G,
                                         const TriangularSet& T0, Rng& rng) {
  TriangularSet T = standard_names(lift_bivariate(T0));
  const PrimeField& F = T.F;
  if (G.size() != T.delta()) raise(Errc::LengthMismatch, "G has the wrong length");

  // V(T1, T2, Y - G) under Y < X1 < X2.
  TriangularSet Tp = insert_level(T, 2, "Y", G);
  std::vector<TriangularSet> U = decompose(Tp, {2, 0, 1}, rng);

  // Prepend Z - F_i(Y) to every component and decompose back.
  std::vector<Poly> R;
  for (const auto& c : U) R.push_back(to_poly(c.polys[0]));
  std::vector<Poly> Fi = multi_reduce(F, Fp, R);
  std::vector<TriangularSet> V;
  for (std::size_t i = 0; i < U.size(); ++i)
    V.push_back(insert_level(U[i], 1, "Z", to_element(Fi[i], deg(R[i]))));
  Decomposition back = solve_p1({V, {}, {2, 3, 0, 1}}, rng);

  if (back.components.size() != 1) raise(Errc::MalformedResultChain, "expected one component");
  const TriangularSet& C = back.components[0];
  if (C.d != std::vector<std::size_t>{T.d[0], T.d[1], 1, 1} || C.polys[0] != T.polys[0] ||
      C.polys[1] != T.polys[1])
    raise(Errc::MalformedResultChain, "final chain has the wrong shape");
  ResidueElement K = C.coeff(3, 0);
  for (auto& x : K) x = F.neg(x);
  return K;
}

Poly form_to_trace_multiplier(const LinearForm& l, const Poly& Fp, const Poly& G_inv,
                              const PrimeField& K) {
  const std::size_t d = static_cast<std::size_t>(deg(Fp));
  Poly S(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(std::min(d, l.size())));
  normalize(S);
  Poly B = rev(mul_trunc(K, S, rev(Fp, d), d), d - 1);
  return mulmod(K, B, G_inv, Fp);
}

ResidueElement form_to_trace_multiplier_bivariate(const LinearForm& l, const TriangularSet& T0) {
  TriangularSet T = lift_bivariate(T0);
  const PrimeField& F = T.F;
  const std::size_t d1 = T.d[0], d2 = T.d[1];
  if (l.size() != T.delta()) raise(Errc::LengthMismatch, "form has the wrong length");
  Poly T1 = to_poly(T.polys[0]);
  Poly dT1 = poly_rem(F, derivative(F, T1), T1);
  if (deg(poly_gcd(F, dT1, T1)) != 0) raise(Errc::ZeroDivisor, "T1' is not invertible");
  Poly g1 = invmod(F, dT1, T1);

  // l = tau1 o L with L(X2^i) = lambda_i.
  std::vector<Poly> lambda(d2);
  for (std::size_t i = 0; i < d2; ++i) {
    LinearForm li(l.begin() + static_cast<std::ptrdiff_t>(i * d1),
                  l.begin() + static_cast<std::ptrdiff_t>((i + 1) * d1));
    lambda[i] = form_to_trace_multiplier(li, T1, g1, F);
  }
  // L = A tau2 over R_1: B = rev(S rev(T2) mod X2^d2, d2 - 1) with
  // coefficients in R_1, then A = B / (dT2/dX2).
  std::vector<Poly> revT2(d2 + 1);
  for (std::size_t a = 0; a <= d2; ++a) revT2[a] = to_poly(T.coeff(1, d2 - a));
  std::vector<Poly> prod(d2);
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; a + b < d2; ++b)
      prod[a + b] = add(F, prod[a + b], mulmod(F, lambda[a], revT2[b], T1));
  ResidueElement B(T.delta(), 0);
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t t = 0; t < prod[d2 - 1 - j].size(); ++t) B[j * d1 + t] = prod[d2 - 1 - j][t];

  ResidueElement D(T.delta(), 0);
  for (std::size_t a = 1; a <= d2; ++a) {
    ResidueElement c = T.coeff(1, a);
    for (std::size_t t = 0; t < d1; ++t) D[(a - 1) * d1 + t] = F.mul(F.reduce(a), c[t]);
  }
  Ring R(T);
  return R.mul(B, invert_element(D, R));
}

std::vector<u64> powproj_via_decomposition(const LinearForm& l, const ResidueElement& G,
                                           const TriangularSet& T0, std::size_t f, Rng& rng,
                                           DualityTrace* trace) {
  TriangularSet T = standard_names(lift_bivariate(T0));
  const PrimeField& F = T.F;
  if (G.size() != T.delta()) raise(Errc::LengthMismatch, "G has the wrong length");
  ResidueElement A = form_to_trace_multiplier_bivariate(l, T);

  // V(T1, T2, Y - A, Z - G) under Z < Y < X1 < X2.
  TriangularSet Tp = insert_level(insert_level(T, 2, "Y", A), 3, "Z", G);
  std::vector<TriangularSet> U = decompose(Tp, {3, 2, 0, 1}, rng);

  std::vector<Poly> R;
  std::vector<std::vector<u64>> forms;
  if (trace) *trace = DualityTrace{};
  for (const auto& C : U) {
    const std::size_t r = C.d[0];
    LinearForm tau = detail::tower_trace_form(C);
    ResidueElement Y = reduce({{{{0, 1}, 1}}}, C);
    std::vector<u64> li(r);
    for (std::size_t j = 0; j < r; ++j) {
      // Z^j is the j-th basis monomial.
      ResidueElement zj = basis_monomial(C, C.n(), {j, 0, 0, 0});
      if (zj.size() <= j || zj[j] != 1)
        raise(Errc::MalformedResultChain, "pure powers of Z are not basis monomials");
      li[j] = apply_form(F, tau, tower_mul(C, C.n(), Y, zj));
    }
    R.push_back(to_poly(C.polys[0]));
    forms.push_back(li);
    if (trace) {
      trace->R.push_back(R.back());
      trace->trace_of_one.push_back(tau[0]);
      trace->ell.push_back(li);
    }
  }
  if (trace) trace->A = A;
  if (R.empty()) return std::vector<u64>(f, 0);
  return transposed_multi_reduce(F, forms, R, f);
}

}  // namespace trideco
