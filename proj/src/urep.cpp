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

#include "trideco/urep.hpp"

#include "trideco/error.hpp"
#include "trideco/ptree.hpp"
#include "urep_internal.hpp"

namespace trideco {

UnivariateRep empty_urep(const PrimeField& F, std::vector<std::string> vars) {
  UnivariateRep u;
  u.F = F;
  u.U.assign(vars.size(), Poly{});
  u.mu.assign(vars.size(), 0);
  u.vars = std::move(vars);
  return u;
}

void check_urep(const UnivariateRep& u) {
  const PrimeField& F = u.F;
  if (u.U.size() != u.n() || u.mu.size() != u.n()) raise(Errc::InvalidArgument, "urep arity mismatch");
  if (deg(u.P) < 0 || u.P.back() != 1) raise(Errc::InvalidArgument, "P must be monic");
  for (const auto& c : u.U)
    if (deg(c) >= deg(u.P)) raise(Errc::InvalidArgument, "coordinate not reduced mod P");
  if (u.empty()) return;
  if (!is_squarefree(F, u.P)) raise(Errc::InvalidArgument, "P is not squarefree");
  Poly s = poly_rem(F, detail::linear_combination(F, u.mu, u.U), u.P);
  if (s != poly_rem(F, Poly{0, 1}, u.P)) raise(Errc::InvalidArgument, "sum mu_i U_i is not X mod P");
}

UnivariateRep change_separating(const UnivariateRep& u, const std::vector<u64>& nu) {
  if (nu.size() != u.n()) raise(Errc::LengthMismatch, "form has the wrong arity");
  if (u.empty()) {
    UnivariateRep r = empty_urep(u.F, u.vars);
    r.mu = nu;
    return r;
  }
  const PrimeField& F = u.F;
  const std::size_t delta = u.degree();
  Ring R = detail::univariate_ring(F, u.P);
  ResidueElement N = to_element(detail::linear_combination(F, nu, u.U), delta);
  Poly Q = char_poly(N, R);
  if (!is_squarefree(F, Q)) raise(Errc::NotSeparating, "form is not injective on the set");
  UnivariateRep r;
  r.F = F;
  r.vars = u.vars;
  r.P = Q;
  r.mu = nu;
  for (const auto& Ui : u.U) {
    auto V = detail::recover(R, N, Q, to_element(Ui, delta));
    if (!V) raise(Errc::NotInSubalgebra, "coordinate is not a polynomial in the new form");
    r.U.push_back(*V);
  }
  return r;
}

namespace {

UnivariateRep merge(const UnivariateRep& u, const UnivariateRep& v, Rng& rng, bool want_union) {
  if (!(u.F == v.F) || u.vars != v.vars) raise(Errc::InvalidArgument, "representations over different rings");
  if (v.empty()) return u;
  if (u.empty()) return want_union ? v : u;
  const PrimeField& F = u.F;
  const std::size_t n = u.n();
  const std::size_t delta = u.degree() + v.degree();
  for (std::size_t attempt = 1; attempt <= rng.max_retries(); ++attempt) {
    std::vector<u64> lambda = random_form(F, n, delta, rng);
    UnivariateRep a, b;
    try {
      a = change_separating(u, lambda);
      b = change_separating(v, lambda);
    } catch (const Error& e) {
      if (e.code() != Errc::NotSeparating) throw;
      continue;
    }
    Poly S = poly_gcd(F, a.P, b.P);
    bool compatible = true;
    for (std::size_t i = 0; i < n && compatible; ++i)
      compatible = poly_rem(F, sub(F, a.U[i], b.U[i]), S).empty();
    if (!compatible) continue;
    rng.record(attempt, false);
    Poly P2 = poly_quo(F, a.P, S), Q2 = poly_quo(F, b.P, S);
    UnivariateRep r;
    r.F = F;
    r.vars = u.vars;
    r.mu = lambda;
    if (!want_union) {
      r.P = P2;
      for (const auto& c : a.U) r.U.push_back(deg(P2) > 0 ? poly_rem(F, c, P2) : Poly{});
      return r;
    }
    std::vector<Poly> moduli;
    for (const Poly* m : {&P2, &S, &Q2})
      if (deg(*m) > 0) moduli.push_back(*m);
    r.P = poly_mul(F, poly_mul(F, P2, S), Q2);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Poly> res;
      if (deg(P2) > 0) res.push_back(poly_rem(F, a.U[i], P2));
      if (deg(S) > 0) res.push_back(poly_rem(F, a.U[i], S));
      if (deg(Q2) > 0) res.push_back(poly_rem(F, b.U[i], Q2));
      r.U.push_back(crt_combine(F, res, moduli));
    }
    return r;
  }
  rng.record(rng.max_retries(), true);
  raise(Errc::RetryBudgetExhausted, "no separating form found for the merge");
}

}  // namespace

UnivariateRep merge_union(const UnivariateRep& u, const UnivariateRep& v, Rng& rng) {
  return merge(u, v, rng, true);
}

UnivariateRep merge_difference(const UnivariateRep& u, const UnivariateRep& v, Rng& rng) {
  return merge(u, v, rng, false);
}

UnivariateRep permute_urep(const UnivariateRep& u, const std::vector<std::size_t>& order) {
  if (order.size() != u.n()) raise(Errc::LengthMismatch, "order has the wrong arity");
  UnivariateRep r;
  r.F = u.F;
  r.P = u.P;
  for (auto j : order) {
    if (j >= u.n()) raise(Errc::InvalidArgument, "order index out of range");
    r.vars.push_back(u.vars[j]);
    r.U.push_back(u.U[j]);
    r.mu.push_back(u.mu[j]);
  }
  return r;
}

}  // namespace trideco
