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

#include "doctest.h"
#include "support.hpp"
#include "trideco/kernels.hpp"

using namespace trideco;
using tt::Biv;

namespace {

const PrimeField F7{7};
const PrimeField F65537{65537};
const PrimeField Fbig{962592769};
const PrimeField Fhuge{2305843009213693951ULL};  // 2^61 - 1

TriangularSet x2_plus_1() { return univariate_triset(F7, Poly{1, 0, 1}); }

// Product by the reference routines, independent of Ring.
ResidueElement ref_ring_mul(const TriangularSet& T, const ResidueElement& a,
                            const ResidueElement& b) {
  const PrimeField& F = T.F;
  Poly T1 = tt::t1_of(T);
  if (T.n() == 1) {
    Poly pa(a), pb(b);
    normalize(pa);
    normalize(pb);
    return to_element(tt::ref_rem(F, tt::ref_mul(F, pa, pb), T1), T.delta());
  }
  std::size_t d1 = T.d[0], d2 = T.d[1];
  Biv c = tt::ref_biv_mul(F, tt::to_biv(a, d1, d2), tt::to_biv(b, d1, d2));
  return tt::from_biv(tt::ref_biv_reduce(F, c, T1, tt::biv_of_triset(T)), d1, d2);
}

ResidueElement naive_compose(const TriangularSet& T, const std::vector<u64>& Fc,
                             const DegreeBounds& b, const std::vector<ResidueElement>& G) {
  const PrimeField& F = T.F;
  ResidueElement acc(T.delta(), 0);
  std::size_t f1 = b.f[0], f2 = b.f.size() > 1 ? b.f[1] : 1;
  ResidueElement p2 = one_element(T);
  for (std::size_t c2 = 0; c2 < f2; ++c2) {
    ResidueElement p1 = p2;
    for (std::size_t c1 = 0; c1 < f1; ++c1) {
      u64 c = Fc[c1 + f1 * c2];
      for (std::size_t t = 0; t < acc.size(); ++t) acc[t] = F.add(acc[t], F.mul(c, p1[t]));
      p1 = ref_ring_mul(T, p1, G[0]);
    }
    if (G.size() > 1) p2 = ref_ring_mul(T, p2, G[1]);
  }
  return acc;
}

std::vector<u64> naive_project(const TriangularSet& T, const LinearForm& l,
                               const DegreeBounds& b, const std::vector<ResidueElement>& G) {
  std::size_t f1 = b.f[0], f2 = b.f.size() > 1 ? b.f[1] : 1;
  std::vector<u64> out(f1 * f2);
  ResidueElement p2 = one_element(T);
  for (std::size_t c2 = 0; c2 < f2; ++c2) {
    ResidueElement p1 = p2;
    for (std::size_t c1 = 0; c1 < f1; ++c1) {
      out[c1 + f1 * c2] = apply_form(T.F, l, p1);
      p1 = ref_ring_mul(T, p1, G[0]);
    }
    if (G.size() > 1) p2 = ref_ring_mul(T, p2, G[1]);
  }
  return out;
}

TriangularSet random_triset(std::mt19937_64& g, const PrimeField& F, std::size_t n,
                            std::size_t max_delta) {
  for (;;) {
    std::size_t d1 = 1 + g() % 8, d2 = n == 2 ? 1 + g() % 8 : 1;
    if (d1 * d2 > max_delta) continue;
    if (n == 1) return univariate_triset(F, tt::random_monic(g, F, static_cast<int>(d1)));
    return tt::random_biv_triset(g, F, d1, d2);
  }
}

u64 point_value(const TriangularSet& T, const ResidueElement& a, const std::vector<u64>& pt) {
  return eval_element(T, T.n(), a, pt);
}

}  // namespace

TEST_CASE("reduce: defining relations and recursive remainder oracle") {
  TriangularSet T = x2_plus_1();
  RawPoly x2{{{{2}, 1}}};
  CHECK(reduce(x2, T) == ResidueElement{6, 0});
  RawPoly y{{{{0, 1}, 1}}};
  CHECK(tt::errc_of([&] { reduce(y, T); }) == Errc::VariableNotInRing);

  std::mt19937_64 g(11);
  for (int it = 0; it < 30; ++it) {
    TriangularSet B = tt::random_biv_triset(g, Fbig, 1 + g() % 5, 1 + g() % 5);
    std::size_t d1 = B.d[0], d2 = B.d[1];
    RawPoly t2;
    for (std::size_t k = 0; k <= d2; ++k)
      for (std::size_t j = 0; j < d1; ++j)
        t2.terms.push_back({{static_cast<u32>(j), static_cast<u32>(k)}, B.coeff(1, k)[j]});
    CHECK(reduce(t2, B) == ResidueElement(B.delta(), 0));
    RawPoly t1;
    for (std::size_t j = 0; j <= d1; ++j) t1.terms.push_back({{static_cast<u32>(j)}, B.polys[0][j]});
    CHECK(reduce(t1, B) == ResidueElement(B.delta(), 0));
    // X2 * X1^d1 and a random raw polynomial against the two-step oracle.
    RawPoly m{{{{static_cast<u32>(d1), 1}, 1}}};
    Biv mb(2);
    mb[1] = Poly(d1 + 1, 0);
    mb[1][d1] = 1;
    CHECK(reduce(m, B) == tt::from_biv(tt::ref_biv_reduce(Fbig, mb, tt::t1_of(B), tt::biv_of_triset(B)), d1, d2));
    RawPoly r;
    Biv rb(2 * d2 + 2);
    for (int k = 0; k < 12; ++k) {
      u32 e1 = static_cast<u32>(g() % (2 * d1 + 2)), e2 = static_cast<u32>(g() % (2 * d2 + 2));
      u64 c = tt::rnd(g, Fbig.p());
      r.terms.push_back({{e1, e2}, c});
      rb[e2].resize(std::max<std::size_t>(rb[e2].size(), e1 + 1), 0);
      rb[e2][e1] = Fbig.add(rb[e2][e1], c);
    }
    for (auto& q : rb) normalize(q);
    CHECK(reduce(r, B) == tt::from_biv(tt::ref_biv_reduce(Fbig, rb, tt::t1_of(B), tt::biv_of_triset(B)), d1, d2));
  }
}

TEST_CASE("ring_mul: examples and lift-multiply-reduce oracle") {
  TriangularSet T = x2_plus_1();
  CHECK(ring_mul({1, 1}, {1, 1}, T) == ResidueElement{0, 2});
  CHECK(ring_mul({3, 5}, one_element(T), T) == ResidueElement{3, 5});

  std::mt19937_64 g(12);
  for (const PrimeField* F : {&F7, &F65537, &Fbig, &Fhuge}) {
    for (int it = 0; it < 25; ++it) {
      TriangularSet B = random_triset(g, *F, 1 + it % 2, 36);
      Ring R(B);
      ResidueElement a = tt::random_element(g, *F, B.delta());
      ResidueElement b = tt::random_element(g, *F, B.delta());
      ResidueElement c = tt::random_element(g, *F, B.delta());
      CHECK(R.mul(a, b) == ref_ring_mul(B, a, b));
      CHECK(R.mul(a, b) == R.mul(b, a));
      CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
      CHECK(R.mul(a, R.one()) == a);
    }
  }
  // Larger sizes exercise the NTT and Newton paths.
  TriangularSet B = tt::random_biv_triset(g, Fbig, 70, 40);
  Ring R(B);
  ResidueElement a = tt::random_element(g, Fbig, B.delta());
  ResidueElement b = tt::random_element(g, Fbig, B.delta());
  CHECK(R.mul(a, b) == ref_ring_mul(B, a, b));
  // Past the reduction-table cutoff in d1.
  TriangularSet W = tt::random_biv_triset(g, Fbig, 300, 3);
  Ring RW(W);
  a = tt::random_element(g, Fbig, W.delta());
  b = tt::random_element(g, Fbig, W.delta());
  CHECK(RW.mul(a, b) == ref_ring_mul(W, a, b));
}

TEST_CASE("ring_mul rejects n > 2") {
  TriangularSet T = make_triset(F7, default_vars(3), {{{0}, {1}}, {{0}, {1}}, {{0}, {1}}});
  CHECK(tt::errc_of([&] { Ring R(T); }) == Errc::UnsupportedArity);
  CHECK(tt::errc_of([&] { ring_mul({0}, {0}, T); }) == Errc::UnsupportedArity);
}

TEST_CASE("transposed_mul: example and duality") {
  TriangularSet T = x2_plus_1();
  CHECK(transposed_mul({0, 1}, {1, 0}, T) == LinearForm{0, 6});
  CHECK(transposed_mul(one_element(T), {4, 2}, T) == LinearForm{4, 2});

  std::mt19937_64 g(13);
  for (const PrimeField* F : {&F7, &Fbig, &Fhuge}) {
    for (int it = 0; it < 20; ++it) {
      TriangularSet B = random_triset(g, *F, 1 + it % 2, 64);
      Ring R(B);
      ResidueElement a = tt::random_element(g, *F, B.delta());
      LinearForm l = tt::random_element(g, *F, B.delta());
      LinearForm al = R.transposed_mul(a, l);
      for (int k = 0; k < 20; ++k) {
        ResidueElement b = tt::random_element(g, *F, B.delta());
        CHECK(apply_form(*F, al, b) == apply_form(*F, l, R.mul(a, b)));
      }
    }
  }
  TriangularSet B = tt::random_biv_triset(g, Fbig, 50, 30);
  Ring R(B);
  ResidueElement a = tt::random_element(g, Fbig, B.delta());
  ResidueElement b = tt::random_element(g, Fbig, B.delta());
  LinearForm l = tt::random_element(g, Fbig, B.delta());
  CHECK(apply_form(Fbig, R.transposed_mul(a, l), b) == apply_form(Fbig, l, R.mul(a, b)));
}

TEST_CASE("mod_compose: examples, Horner oracle and operation count") {
  TriangularSet T = x2_plus_1();
  CHECK(mod_compose({0, 1}, {{2}}, {{3, 4}}, T) == ResidueElement{3, 4});
  CHECK(mod_compose({0, 0, 1}, {{3}}, {{1, 1}}, T) == ResidueElement{0, 2});

  std::mt19937_64 g(14);
  for (const PrimeField* F : {&F65537, &Fbig, &Fhuge}) {
    for (int it = 0; it < 40; ++it) {
      std::size_t n = 1 + it % 2, m = 1 + (it / 2) % 2;
      TriangularSet B = random_triset(g, *F, n, 64);
      Ring R(B);
      std::size_t delta = B.delta();
      DegreeBounds bounds;
      if (m == 1) {
        bounds.f = {1 + g() % delta};
      } else {
        std::size_t f1 = 1 + g() % delta;
        bounds.f = {f1, 1 + g() % (delta / f1)};
      }
      std::vector<ResidueElement> G;
      for (std::size_t i = 0; i < m; ++i) G.push_back(tt::random_element(g, *F, delta));
      std::vector<u64> Fc = tt::random_element(g, *F, bounds.delta_f());
      KernelStats st;
      ResidueElement got = mod_compose(Fc, bounds, G, R, &st);
      CHECK(got == naive_compose(B, Fc, bounds, G));
      for (std::size_t i = 0; i < m; ++i) CHECK(st.eps[i] * st.eps_prime[i] >= bounds.f[i]);
      CHECK(st.ring_muls <= st.eps[0] * st.eps[1] + st.eps_prime[0] * st.eps_prime[1] + 2);
    }
  }
  // F = Y1 Y2 reduces to one product.
  TriangularSet B = tt::random_biv_triset(g, Fbig, 4, 3);
  ResidueElement g1 = tt::random_element(g, Fbig, 12), g2 = tt::random_element(g, Fbig, 12);
  CHECK(mod_compose({0, 0, 0, 1}, {{2, 2}}, {g1, g2}, B) == ring_mul(g1, g2, B));
  CHECK(tt::errc_of([&] { mod_compose(std::vector<u64>(16), {{4, 4}}, {g1, g2}, B); }) ==
        Errc::BoundsExceedRingDegree);
  // Univariate F beyond delta_T agrees with the Horner oracle.
  std::vector<u64> big = tt::random_element(g, Fbig, 30);
  CHECK(mod_compose(big, {{30}}, {g1}, B) == naive_compose(B, big, {{30}}, {g1}));
}

TEST_CASE("power_project: example, oracle and pairing identity") {
  TriangularSet T = x2_plus_1();
  CHECK(power_project({1, 0}, {{0, 1}}, {{4}}, T) == std::vector<u64>{1, 0, 6, 0});
  CHECK(power_project({5, 3}, {{1, 0}}, {{2}}, T) == std::vector<u64>{5, 5});

  std::mt19937_64 g(15);
  for (const PrimeField* F : {&F65537, &Fbig, &Fhuge}) {
    for (int it = 0; it < 40; ++it) {
      std::size_t n = 1 + it % 2, m = 1 + (it / 2) % 2;
      TriangularSet B = random_triset(g, *F, n, 64);
      Ring R(B);
      std::size_t delta = B.delta();
      DegreeBounds bounds;
      if (m == 1) {
        bounds.f = {1 + g() % delta};
      } else {
        std::size_t f1 = 1 + g() % delta;
        bounds.f = {f1, 1 + g() % (delta / f1)};
      }
      std::vector<ResidueElement> G;
      for (std::size_t i = 0; i < m; ++i) G.push_back(tt::random_element(g, *F, delta));
      LinearForm l = tt::random_element(g, *F, delta);
      KernelStats st;
      std::vector<u64> got = power_project(l, G, bounds, R, &st);
      CHECK(got == naive_project(B, l, bounds, G));
      CHECK(st.ring_muls + st.transposed_muls <=
            st.eps[0] * st.eps[1] + st.eps_prime[0] * st.eps_prime[1] + 2);
      // sum_c F_c l(G^c) = l(F(G)).
      std::vector<u64> Fc = tt::random_element(g, *F, bounds.delta_f());
      u64 lhs = 0;
      for (std::size_t c = 0; c < Fc.size(); ++c) lhs = F->add(lhs, F->mul(Fc[c], got[c]));
      CHECK(lhs == apply_form(*F, l, mod_compose(Fc, bounds, G, R)));
    }
  }
}

TEST_CASE("trace_form: examples and point sums on split sets") {
  TriangularSet T = x2_plus_1();
  CHECK(trace_form(T) == LinearForm{2, 0});

  std::mt19937_64 g(16);
  for (int it = 0; it < 20; ++it) {
    TriangularSet B = random_triset(g, Fbig, 1 + it % 2, 64);
    CHECK(trace_form(B)[0] == B.delta() % Fbig.p());
    CHECK(detail::tower_trace_form(B) == trace_form(B));
  }
  for (int it = 0; it < 20; ++it) {
    std::vector<std::vector<u64>> pts;
    TriangularSet B = tt::split_biv_triset(g, Fbig, 1 + g() % 6, 1 + g() % 6, pts);
    LinearForm tr = trace_form(B);
    for (std::size_t i = 0; i < B.delta(); ++i) {
      ResidueElement m(B.delta(), 0);
      m[i] = 1;
      u64 s = 0;
      for (const auto& pt : pts) s = Fbig.add(s, point_value(B, m, pt));
      CHECK(tr[i] == s);
    }
  }
}

TEST_CASE("tower trace on a three-level grid") {
  std::mt19937_64 g(17);
  std::vector<std::vector<u64>> roots(3);
  std::vector<std::vector<std::vector<u64>>> c(3);
  for (int i = 0; i < 3; ++i) {
    roots[i] = tt::distinct(g, Fbig.p(), 2 + i);
    Poly P = tt::ref_from_roots(Fbig, roots[i]);
    for (auto x : P) c[i].push_back({x});
  }
  TriangularSet T = make_triset(Fbig, default_vars(3), c);
  LinearForm tr = detail::tower_trace_form(T);
  for (std::size_t i = 0; i < T.delta(); ++i) {
    ResidueElement m(T.delta(), 0);
    m[i] = 1;
    u64 s = 0;
    for (u64 a : roots[0])
      for (u64 b : roots[1])
        for (u64 z : roots[2]) s = Fbig.add(s, eval_element(T, 3, m, {a, b, z}));
    CHECK(tr[i] == s);
  }
}

TEST_CASE("char_poly: examples, Cayley-Hamilton and point products") {
  TriangularSet T = x2_plus_1();
  CHECK(char_poly({0, 1}, T) == Poly{1, 0, 1});
  CHECK(char_poly({3, 0}, T) == tt::ref_from_roots(F7, {3, 3}));

  std::mt19937_64 g(18);
  for (int it = 0; it < 20; ++it) {
    TriangularSet B = random_triset(g, Fbig, 1 + it % 2, 64);
    ResidueElement A = tt::random_element(g, Fbig, B.delta());
    Poly chi = char_poly(A, B);
    CHECK(chi.size() == B.delta() + 1);
    CHECK(detail::compose_any(chi, A, Ring(B)) == ResidueElement(B.delta(), 0));
  }
  for (int it = 0; it < 20; ++it) {
    std::vector<std::vector<u64>> pts;
    TriangularSet B = tt::split_biv_triset(g, Fbig, 1 + g() % 6, 1 + g() % 6, pts);
    ResidueElement A = tt::random_element(g, Fbig, B.delta());
    std::vector<u64> vals;
    for (const auto& pt : pts) vals.push_back(point_value(B, A, pt));
    CHECK(char_poly(A, B) == tt::ref_from_roots(Fbig, vals));
  }
  TriangularSet small = univariate_triset(F7, tt::ref_from_roots(F7, {1, 2, 3, 4, 5, 6, 0}));
  CHECK(tt::errc_of([&] { char_poly(one_element(small), small); }) == Errc::CharacteristicTooSmall);
}

TEST_CASE("inverse_mod_compose") {
  TriangularSet T = x2_plus_1();
  InverseComposition r = inverse_mod_compose({1, 1}, {0, 1}, T);
  CHECK(r.verified);
  CHECK(detail::compose_any(r.U, {1, 1}, Ring(T)) == ResidueElement{0, 1});
  CHECK(inverse_mod_compose({1, 1}, {1, 1}, T).U == Poly{0, 1});

  std::mt19937_64 g(19);
  for (int it = 0; it < 20; ++it) {
    TriangularSet B = random_triset(g, Fbig, 1 + it % 2, 49);
    Ring R(B);
    ResidueElement A = tt::random_element(g, Fbig, B.delta());
    if (!is_squarefree(Fbig, char_poly(A, R))) continue;
    // B = A^2 + 1 recovers X^2 + 1.
    ResidueElement A2 = R.mul(A, A);
    A2[0] = Fbig.add(A2[0], 1);
    if (B.delta() > 2) CHECK(inverse_mod_compose(A, A2, R).U == Poly{1, 0, 1});
    // Any B is a polynomial in a separating A.
    ResidueElement Bv = tt::random_element(g, Fbig, B.delta());
    InverseComposition ic = inverse_mod_compose(A, Bv, R);
    CHECK(ic.verified);
    CHECK(deg(ic.U) < static_cast<int>(B.delta()));
    CHECK(detail::compose_any(ic.U, A, R) == Bv);
  }
  // A = X1 is not separating on a grid with d2 > 1.
  std::vector<std::vector<u64>> pts;
  TriangularSet S = tt::split_biv_triset(g, Fbig, 3, 2, pts);
  ResidueElement x1 = basis_monomial(S, 2, {1, 0});
  CHECK(tt::errc_of([&] { inverse_mod_compose(x1, x1, S); }) == Errc::NotSeparating);
  // The generalized route still finds X1 as a polynomial in X1.
  Poly U = detail::generalized_inverse(x1, x1, Ring(S), char_poly(x1, S));
  CHECK(U == Poly{0, 1});
}

TEST_CASE("generalized inverse composition flags B outside the subalgebra") {
  std::mt19937_64 g(21);
  std::vector<std::vector<u64>> pts;
  TriangularSet S = tt::split_biv_triset(g, Fbig, 3, 2, pts);
  Ring R(S);
  ResidueElement x1 = basis_monomial(S, 2, {1, 0});
  ResidueElement x2 = basis_monomial(S, 2, {0, 1});
  Poly U = detail::generalized_inverse(x1, x2, R, char_poly(x1, R));
  CHECK(detail::compose_any(U, x1, R) != x2);
}

TEST_CASE("invert_element") {
  TriangularSet T = x2_plus_1();
  CHECK(invert_element({0, 2}, T) == ResidueElement{0, 3});
  CHECK(invert_element(one_element(T), T) == one_element(T));
  CHECK(tt::errc_of([&] { invert_element({0, 0}, T); }) == Errc::ZeroDivisor);

  std::mt19937_64 g(20);
  for (int it = 0; it < 20; ++it) {
    TriangularSet B = random_triset(g, Fbig, 1 + it % 2, 64);
    Ring R(B);
    ResidueElement A = tt::random_element(g, Fbig, B.delta());
    if (coeff(char_poly(A, R), 0) == 0) continue;
    CHECK(R.mul(A, invert_element(A, R)) == R.one());
  }
}
