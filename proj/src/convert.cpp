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

// Triangular <-> univariate conversion, one variable at a time.
//
// Level k of a receipt relates R_{<=k} and K[Z]/<P_k> through the
// bivariate ring R'_k = K[Y, X_k]/<C(Y), T'_k(Y, X_k)> with C = P_{k-1}:
// Y stands for the level k-1 primitive element, so R_{<=k} = R'_k once the
// coefficients of T_k are pushed down, and R'_k = K[Z]/<P_k> via
// Z = M(Y) + mu_k X_k, Y = V_Y(Z), X_k = V_X(Z).

#include "trideco/error.hpp"
#include "trideco/urep.hpp"
#include "urep_internal.hpp"

namespace trideco {

struct ConversionReceipt::Level {
  std::size_t c = 1;  // deg P_{k-1} (1 at level 1)
  std::size_t d = 1;  // d_k
  std::shared_ptr<const Ring> RP;  // K[Z]/<P_k>
  // Level 1: X_1 -> W (in K[Z]/P_1), Z -> N (in R_{T_1}).
  // Level k: Y -> VY, X_k -> W (in K[Z]/P_k), Z -> N (in R'_k).
  std::shared_ptr<const Ring> Rsrc;
  ResidueElement VY, W, N;
};

ConversionReceipt::ConversionReceipt() = default;
ConversionReceipt::~ConversionReceipt() = default;
ConversionReceipt::ConversionReceipt(const ConversionReceipt&) = default;
ConversionReceipt& ConversionReceipt::operator=(const ConversionReceipt&) = default;

struct ConversionBuilder {
  using Level = ConversionReceipt::Level;

  // Element of R_{<=k} -> polynomial mod P_k.
  static Poly push(const std::vector<std::shared_ptr<const Level>>& lv, std::size_t k,
                   const ResidueElement& a) {
    const Level& L = *lv[k - 1];
    if (k == 1) return to_poly(mod_compose(a, {{L.d}}, {L.W}, *L.RP));
    std::vector<u64> tensor(L.c * L.d, 0);
    for (std::size_t s = 0; s < L.d; ++s) {
      ResidueElement slot(a.begin() + static_cast<std::ptrdiff_t>(s * L.c),
                          a.begin() + static_cast<std::ptrdiff_t>((s + 1) * L.c));
      Poly b = push(lv, k - 1, slot);
      std::copy(b.begin(), b.end(), tensor.begin() + static_cast<std::ptrdiff_t>(s * L.c));
    }
    return to_poly(mod_compose(tensor, {{L.c, L.d}}, {L.VY, L.W}, *L.RP));
  }

  // Polynomial of degree < deg P_k -> element of R_{<=k} (length c * d).
  static ResidueElement pull(const std::vector<std::shared_ptr<const Level>>& lv, std::size_t k,
                             const Poly& a) {
    const Level& L = *lv[k - 1];
    if (a.empty()) return ResidueElement(L.c * L.d, 0);
    ResidueElement b = mod_compose(a, {{a.size()}}, {L.N}, *L.Rsrc);
    if (k == 1) return b;
    ResidueElement out;
    for (std::size_t s = 0; s < L.d; ++s) {
      Poly slot(b.begin() + static_cast<std::ptrdiff_t>(s * L.c),
                b.begin() + static_cast<std::ptrdiff_t>((s + 1) * L.c));
      normalize(slot);
      ResidueElement e = pull(lv, k - 1, slot);
      out.insert(out.end(), e.begin(), e.end());
    }
    return out;
  }

  static ConversionReceipt make(TriangularSet T, UnivariateRep u,
                                std::vector<std::shared_ptr<const Level>> levels) {
    ConversionReceipt r;
    r.T_ = std::move(T);
    r.u_ = std::move(u);
    r.levels_ = std::move(levels);
    return r;
  }

  static const std::vector<std::shared_ptr<const Level>>& levels(const ConversionReceipt& r) {
    return r.levels_;
  }
};

Poly ConversionReceipt::push(const ResidueElement& a) const {
  if (a.size() != T_.delta()) raise(Errc::LengthMismatch, "element has the wrong length");
  return ConversionBuilder::push(levels_, levels_.size(), a);
}

ResidueElement ConversionReceipt::pull(const Poly& a) const {
  if (deg(a) >= deg(u_.P)) raise(Errc::InvalidArgument, "polynomial not reduced mod P");
  return ConversionBuilder::pull(levels_, levels_.size(), a);
}

namespace {

using Level = ConversionReceipt::Level;

// X_{j+1} reduced mod T; it collapses to a constant when its degree is 1.
ResidueElement variable(const TriangularSet& Tp, std::size_t j) {
  RawPoly m;
  std::vector<u32> e(j + 1, 0);
  e[j] = 1;
  m.terms.push_back({e, 1});
  return reduce(m, Tp);
}

// Coefficients of T'_k as polynomials in Y, from the level k-1 receipt.
TriangularSet bivariate_triset(const PrimeField& F, const Poly& C,
                               const std::vector<Poly>& coeffs) {
  std::vector<std::vector<std::vector<u64>>> lv(2);
  for (u64 c : C) lv[0].push_back({c});
  for (const auto& c : coeffs) lv[1].push_back(c.empty() ? std::vector<u64>{0} : c);
  return make_triset(F, {"Y", "X"}, lv);
}

// The conversions only need p > delta for their characteristic
// polynomials; the sample set shrinks to F_p when p <= delta^2, at the cost
// of a worse success bound per draw.
void require_char(const PrimeField& F, std::size_t delta) {
  if (F.p() <= static_cast<u64>(delta)) raise(Errc::CharacteristicTooSmall, "need p > delta");
}

std::vector<u64> draw_form(const PrimeField& F, std::size_t n, std::size_t delta, Rng& rng) {
  if (F.p() > static_cast<u64>(delta) * delta) return random_form(F, n, delta, rng);
  std::vector<u64> r(n);
  for (auto& x : r) x = rng.below(F.p());
  return r;
}

}  // namespace

TrisetConversion urep_from_triset(const TriangularSet& T, Rng& rng) {
  validate(T);
  const PrimeField& F = T.F;
  const std::size_t n = T.n();
  require_char(F, T.delta());
  std::vector<std::shared_ptr<const Level>> levels;

  Poly P = to_poly(T.polys[0]);
  if (!is_squarefree(F, P)) raise(Errc::RadicalitySuspect, "T1 is not squarefree");
  {
    auto L = std::make_shared<Level>();
    L->d = T.d[0];
    L->RP = std::make_shared<const Ring>(detail::univariate_ring(F, P));
    L->Rsrc = std::make_shared<const Ring>(prefix(T, 1));
    L->W = to_element(poly_rem(F, Poly{0, 1}, P), L->d);
    L->N = variable(prefix(T, 1), 0);
    levels.push_back(L);
  }
  std::vector<Poly> U{to_poly(levels[0]->W)};
  std::vector<u64> mu{1};

  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t c = deg(P), d = T.d[k - 1];
    std::vector<Poly> coeffs;
    for (std::size_t a = 0; a <= d; ++a)
      coeffs.push_back(ConversionBuilder::push(levels, k - 1, T.coeff(k - 1, a)));
    TriangularSet Tp = bivariate_triset(F, P, coeffs);
    auto Rp = std::make_shared<const Ring>(Tp);
    ResidueElement Y = variable(Tp, 0), X = variable(Tp, 1);

    u64 lambda = 0;
    ResidueElement N;
    Poly chi;
    bool found = false;
    for (std::size_t attempt = 1; attempt <= rng.max_retries(); ++attempt) {
      lambda = draw_form(F, 1, T.delta_below(k), rng)[0];
      N = Y;
      for (std::size_t i = 0; i < N.size(); ++i) N[i] = F.add(N[i], F.mul(lambda, X[i]));
      chi = char_poly(N, *Rp);
      if (is_squarefree(F, chi)) {
        rng.record(attempt, false);
        found = true;
        break;
      }
    }
    if (!found) {
      rng.record(rng.max_retries(), true);
      raise(Errc::RadicalitySuspect, "no squarefree characteristic polynomial at level " +
                                         std::to_string(k));
    }
    auto VY = detail::recover(*Rp, N, chi, Y);
    auto VX = detail::recover(*Rp, N, chi, X);
    if (!VY || !VX) raise(Errc::RadicalitySuspect, "coordinates are not polynomials in the form");

    auto L = std::make_shared<Level>();
    L->c = c;
    L->d = d;
    L->RP = std::make_shared<const Ring>(detail::univariate_ring(F, chi));
    L->Rsrc = Rp;
    L->VY = to_element(*VY, deg(chi));
    L->W = to_element(*VX, deg(chi));
    L->N = N;
    for (auto& Uj : U) Uj = to_poly(detail::compose_any(Uj, L->VY, *L->RP));
    U.push_back(*VX);
    mu.push_back(lambda);
    levels.push_back(L);
    P = chi;
  }

  UnivariateRep u;
  u.F = F;
  u.vars = T.vars;
  u.P = P;
  u.U = U;
  u.mu = mu;
  ConversionReceipt r = ConversionBuilder::make(T, u, std::move(levels));
  return {std::move(u), std::move(r)};
}

UrepConversion triset_from_urep(const UnivariateRep& u0, const std::vector<std::size_t>& order,
                                Rng& rng) {
  check_urep(u0);
  if (u0.empty()) raise(Errc::InvalidArgument, "the empty set has no triangular set");
  UnivariateRep u = permute_urep(u0, order);
  const PrimeField& F = u.F;
  const std::size_t n = u.n();
  require_char(F, u.degree());

  // Top-down: level data and the coefficients of T'_k over K[Y]/<C>.
  std::vector<std::shared_ptr<Level>> top(n);
  std::vector<std::vector<Poly>> tcoef(n);
  Poly P = u.P;
  std::vector<Poly> W = u.U;
  std::vector<u64> mu = u.mu;

  for (std::size_t k = n; k >= 2; --k) {
    const std::size_t delta = deg(P);
    auto RP = std::make_shared<const Ring>(detail::univariate_ring(F, P));
    std::vector<u64> mu2;
    ResidueElement N2;
    std::vector<Poly> U2;
    std::vector<std::pair<Poly, int>> sqf;
    bool found = false;
    for (std::size_t attempt = 1; attempt <= rng.max_retries() && !found; ++attempt) {
      mu2 = draw_form(F, k - 1, delta, rng);
      N2 = to_element(detail::linear_combination(F, mu2, std::vector<Poly>(W.begin(), W.begin() + k - 1)),
                      delta);
      Poly chi = char_poly(N2, *RP);
      U2.clear();
      bool ok = true;
      for (std::size_t j = 0; j + 1 < k && ok; ++j) {
        auto V = detail::recover(*RP, N2, chi, to_element(W[j], delta));
        if (V) U2.push_back(*V);
        ok = V.has_value();
      }
      if (!ok) continue;
      rng.record(attempt, false);
      found = true;
      sqf = squarefree_decomposition(F, chi);
      if (sqf.size() != 1)
        raise(Errc::NotEquiprojectable, "fibers over level " + std::to_string(k - 1) +
                                            " have different sizes");
    }
    if (!found) {
      rng.record(rng.max_retries(), true);
      raise(Errc::RetryBudgetExhausted, "no separating form for the projection");
    }
    const Poly C = monic(F, sqf[0].first);
    const std::size_t c = deg(C), e = static_cast<std::size_t>(sqf[0].second);

    // s_j[i] = tr(W_k^j N2^i), then the fiber power sums of X_k over K[Y]/<C>.
    ResidueElement Wk = to_element(W[k - 1], delta);
    LinearForm ell = RP->transposed_mul(Wk, RP->trace());
    std::vector<u64> pp = power_project(ell, {N2, Wk}, {{c, e}}, *RP);
    Poly dinv = invmod(F, poly_rem(F, derivative(F, C), C), C);
    Poly revC = rev(C, c);
    std::vector<Poly> s(e + 1);
    for (std::size_t j = 1; j <= e; ++j) {
      Poly ser(pp.begin() + static_cast<std::ptrdiff_t>(c * (j - 1)),
               pp.begin() + static_cast<std::ptrdiff_t>(c * j));
      normalize(ser);
      Poly H = rev(mul_trunc(F, ser, revC, c), c - 1);
      s[j] = mulmod(F, H, dinv, C);
    }
    // Newton identities: m e_m = sum_{i=1}^m (-1)^(i-1) e_{m-i} s_i.
    std::vector<Poly> el(e + 1);
    el[0] = Poly{1};
    for (std::size_t m = 1; m <= e; ++m) {
      Poly acc;
      for (std::size_t i = 1; i <= m; ++i) {
        Poly t = mulmod(F, el[m - i], s[i], C);
        acc = (i % 2) ? add(F, acc, t) : sub(F, acc, t);
      }
      el[m] = scale(F, acc, F.inv(static_cast<u64>(m) % F.p()));
    }
    std::vector<Poly> tc(e + 1);
    for (std::size_t m = 0; m <= e; ++m) tc[e - m] = (m % 2) ? neg(F, el[m]) : el[m];
    tcoef[k - 1] = tc;

    TriangularSet Tp = bivariate_triset(F, C, tc);
    auto L = std::make_shared<Level>();
    L->c = c;
    L->d = e;
    L->RP = RP;
    L->Rsrc = std::make_shared<const Ring>(Tp);
    L->VY = N2;
    L->W = Wk;
    Poly M = poly_rem(F, detail::linear_combination(F, std::vector<u64>(mu.begin(), mu.begin() + k - 1), U2), C);
    ResidueElement X = variable(Tp, 1);
    L->N = ResidueElement(c * e, 0);
    for (std::size_t i = 0; i < M.size(); ++i) L->N[i] = M[i];
    for (std::size_t i = 0; i < L->N.size(); ++i) L->N[i] = F.add(L->N[i], F.mul(mu[k - 1], X[i]));
    top[k - 1] = L;

    for (auto& x : U2) x = poly_rem(F, x, C);
    P = C;
    W = U2;
    mu = mu2;
  }

  // Level 1: T_1 is the characteristic polynomial of W_1.
  {
    auto RP = std::make_shared<const Ring>(detail::univariate_ring(F, P));
    ResidueElement W1 = to_element(W[0], deg(P));
    Poly T1 = char_poly(W1, *RP);
    TriangularSet t1 = univariate_triset(F, T1, u.vars[0]);
    auto L = std::make_shared<Level>();
    L->d = deg(T1);
    L->RP = RP;
    L->Rsrc = std::make_shared<const Ring>(t1);
    L->W = W1;
    ResidueElement x1 = variable(t1, 0);
    L->N = ResidueElement(x1.size(), 0);
    for (std::size_t i = 0; i < x1.size(); ++i) L->N[i] = F.mul(mu[0], x1[i]);
    top[0] = L;
  }

  // Bottom-up: pull the coefficients of each T'_k into R_{<k}.
  std::vector<std::shared_ptr<const Level>> levels(top.begin(), top.end());
  std::vector<std::vector<std::vector<u64>>> coeffs(n);
  for (u64 c : to_poly(top[0]->Rsrc->triset().polys[0])) coeffs[0].push_back({c});
  for (std::size_t k = 2; k <= n; ++k)
    for (const auto& c : tcoef[k - 1])
      coeffs[k - 1].push_back(c.empty() ? ResidueElement(top[k - 1]->c, 0)
                                        : ConversionBuilder::pull(levels, k - 1, c));
  TriangularSet T = make_triset(F, u.vars, coeffs);
  ConversionReceipt r = ConversionBuilder::make(T, u0, std::move(levels));
  return {std::move(T), std::move(r)};
}

Poly push_element(const ResidueElement& a, const TriangularSet& T, const UnivariateRep& u,
                  const ConversionReceipt& r) {
  if (!(r.triset() == T) || !(r.urep() == u))
    raise(Errc::StaleConversionData, "receipt belongs to a different pair");
  return r.push(a);
}

ResidueElement pull_element(const Poly& a, const UnivariateRep& u, const TriangularSet& T,
                            const ConversionReceipt& r) {
  if (!(r.triset() == T) || !(r.urep() == u))
    raise(Errc::StaleConversionData, "receipt belongs to a different pair");
  return r.pull(a);
}

}  // namespace trideco
