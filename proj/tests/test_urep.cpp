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

#include <set>

#include "doctest.h"
#include "support.hpp"
#include "trideco/oracle.hpp"
#include "trideco/urep.hpp"

using namespace trideco;

namespace {

const PrimeField F13{13};

PointSet pts(const PrimeField& F, std::vector<Point> v) {
  PointSet S;
  S.F = F;
  S.vars = default_vars(v.empty() ? 2 : v[0].size());
  std::sort(v.begin(), v.end());
  S.points = std::move(v);
  return S;
}

u64 form_at(const PrimeField& F, const std::vector<u64>& mu, const Point& x) {
  u64 v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) v = F.add(v, F.mul(mu[i], x[i]));
  return v;
}

// P = prod (X - mu(x)) and x_i = U_i(mu(x)) for every point.
void check_parametrizes(const UnivariateRep& u, const PointSet& S) {
  check_urep(u);
  std::vector<u64> z;
  for (const auto& x : S.points) {
    z.push_back(form_at(u.F, u.mu, x));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(eval(u.F, u.U[i], z.back()) == x[i]);
  }
  CHECK(u.P == from_roots(u.F, z));
}

}  // namespace

TEST_CASE("random_form") {
  PrimeField F{10007};
  Rng a(42), b(42);
  auto x = random_form(F, 3, 5, a);
  CHECK(x == random_form(F, 3, 5, b));
  for (u64 c : x) CHECK(c < 25);
  CHECK(random_form(F, 4, 5, a, true).back() == 1);
  CHECK(tt::errc_of([&] { random_form(F13, 2, 4, a); }) == Errc::CharacteristicTooSmall);

  // Six points, every pair sharing a line through the origin direction set
  // as often as possible: the sample set still separates often enough.
  PointSet S = pts(F, {{0, 0}, {1, 1}, {2, 2}, {1, 0}, {0, 1}, {3, 5}});
  Rng r(7);
  int good = 0;
  for (int it = 0; it < 1000; ++it) {
    auto mu = random_form(F, 2, 6, r);
    std::set<u64> vals;
    for (const auto& p : S.points) vals.insert(form_at(F, mu, p));
    good += vals.size() == S.size();
  }
  CHECK(good >= 400);
}

TEST_CASE("change_separating examples") {
  PointSet V = pts(F13, {{1, 1}, {1, 2}, {2, 1}});
  UnivariateRep u = urep_of_points(V, {1, 2});
  check_parametrizes(u, V);
  CHECK(tt::errc_of([&] { change_separating(u, {1, 0}); }) == Errc::NotSeparating);
  UnivariateRep v = change_separating(u, {2, 1});
  CHECK(v.P == from_roots(F13, {3, 4, 5}));
  check_parametrizes(v, V);
  CHECK(change_separating(u, u.mu) == u);

  std::mt19937_64 g(11);
  PrimeField F{10007};
  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 1 + it % 4;
    PointSet S = random_points(F, n, 1 + g() % 25, g);
    UnivariateRep w;
    for (;;) {
      try {
        w = urep_of_points(S, random_form(F, n, S.size(), rng));
        break;
      } catch (const Error&) {
      }
    }
    auto nu = random_form(F, n, S.size(), rng);
    try {
      check_parametrizes(change_separating(w, nu), S);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotSeparating);
    }
  }
}

TEST_CASE("merge examples") {
  Rng rng(5);
  PointSet V1 = pts(F13, {{1}, {2}}), W1 = pts(F13, {{3}});
  UnivariateRep v = urep_of_points(V1, {1}), w = urep_of_points(W1, {1});
  UnivariateRep un = merge_union(v, w, rng);
  CHECK(urep_points(un).points == std::vector<Point>{{1}, {2}, {3}});
  CHECK(un.degree() == 3);
  CHECK(urep_points(merge_difference(v, w, rng)).points == V1.points);

  PrimeField F{101};
  PointSet A = pts(F, {{1, 1}, {2, 5}}), B = pts(F, {{2, 5}, {3, 7}});
  UnivariateRep a = urep_of_points(A, {1, 3}), b = urep_of_points(B, {1, 1});
  UnivariateRep ab = merge_union(a, b, rng);
  CHECK(ab.degree() == 3);
  check_urep(ab);
  CHECK(urep_points(ab).points == std::vector<Point>{{1, 1}, {2, 5}, {3, 7}});
  UnivariateRep d = merge_difference(a, b, rng);
  CHECK(d.degree() == 1);
  CHECK(urep_points(d).points == std::vector<Point>{{1, 1}});

  CHECK(urep_points(merge_union(a, a, rng)).points == A.points);
  CHECK(merge_difference(a, a, rng).empty());
  UnivariateRep e = empty_urep(F, A.vars);
  CHECK(urep_points(merge_union(e, a, rng)).points == A.points);
  CHECK(merge_difference(e, a, rng).empty());
  CHECK(tt::errc_of([&] { merge_union(urep_of_points(pts(F13, {{1}, {2}}), {1}),
                                      urep_of_points(pts(F13, {{3}, {4}}), {1}), rng); }) ==
        Errc::CharacteristicTooSmall);
}

TEST_CASE("merges agree with the point oracle") {
  std::mt19937_64 g(12);
  PrimeField F{962592769};
  Rng rng(9);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 1 + it % 3;
    PointSet all = random_points(F, n, 2 + g() % 30, g);
    std::vector<Point> x, y, both;
    for (const auto& p : all.points) {
      switch (g() % 3) {
        case 0: x.push_back(p); break;
        case 1: y.push_back(p); break;
        default: both.push_back(p);
      }
    }
    std::vector<Point> X = x, Y = y;
    X.insert(X.end(), both.begin(), both.end());
    Y.insert(Y.end(), both.begin(), both.end());
    PointSet SX = pts(F, X), SY = pts(F, Y);
    SX.vars = SY.vars = all.vars;
    UnivariateRep ux = urep_of_points(SX, random_form(F, n, SX.size() + 1, rng));
    UnivariateRep uy = urep_of_points(SY, random_form(F, n, SY.size() + 1, rng));
    UnivariateRep un = merge_union(ux, uy, rng), df = merge_difference(ux, uy, rng);
    check_urep(un);
    check_urep(df);
    PointSet U = all, D = pts(F, x);
    CHECK(urep_points(un).points == U.points);
    CHECK(urep_points(df).points == D.points);
    CHECK(un.degree() + both.size() == ux.degree() + uy.degree());
  }
  CHECK(rng.stats().exhausted == 0);
  CHECK(rng.stats().mean() <= 2.0);
}

TEST_CASE("urep_from_triset examples") {
  Rng rng(1);
  Poly P = from_roots(F13, {2, 7, 9});
  TrisetConversion c = urep_from_triset(univariate_triset(F13, P), rng);
  CHECK(c.urep.P == P);
  CHECK(c.urep.U == std::vector<Poly>{{0, 1}});
  CHECK(c.urep.mu == std::vector<u64>{1});

  PointSet grid = pts(F13, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  TriangularSet T = interpolate_triset(grid, identity_order(2));
  UnivariateRep u = urep_from_triset(T, rng).urep;
  check_parametrizes(u, grid);
  CHECK(u.degree() == 4);

  CHECK(tt::errc_of([&] { urep_from_triset(univariate_triset(F13, Poly{1, 11, 1}), rng); }) ==
        Errc::RadicalitySuspect);
  // X2^2 over both roots of T1: the ideal is not radical.
  TriangularSet nr = make_triset(F13, {"X1", "X2"}, {{{12}, {0}, {1}}, {{0}, {0}, {1}}});
  CHECK(tt::errc_of([&] { urep_from_triset(nr, rng); }) == Errc::RadicalitySuspect);
}

TEST_CASE("triset_from_urep examples") {
  Rng rng(2);
  UnivariateRep u = urep_of_points(pts(F13, {{1, 1}, {1, 2}}), {1, 1});
  CHECK(triset_from_urep(u, identity_order(2), rng).triset ==
        make_triset(F13, {"X1", "X2"}, {{{12}, {1}}, {{2}, {10}, {1}}}));
  UnivariateRep one = urep_of_points(pts(F13, {{4}, {6}}), {1});
  CHECK(triset_from_urep(one, {0}, rng).triset == univariate_triset(F13, one.P));
  PrimeField F{101};
  UnivariateRep bad = urep_of_points(pts(F, {{1, 1}, {1, 2}, {2, 1}}), {1, 3});
  CHECK(tt::errc_of([&] { triset_from_urep(bad, identity_order(2), rng); }) ==
        Errc::NotEquiprojectable);
  // Two points over each value of X2 in the swapped order.
  UnivariateRep sw = urep_of_points(pts(F, {{1, 1}, {2, 1}, {3, 2}, {4, 2}}), {1, 3});
  CHECK(triset_from_urep(sw, {1, 0}, rng).triset ==
        interpolate_triset(urep_points(sw), {1, 0}));
  CHECK(tt::errc_of([&] { triset_from_urep(empty_urep(F, {"X1"}), {0}, rng); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("conversion round trips") {
  std::mt19937_64 g(13);
  Rng rng(4);
  for (int it = 0; it < 120; ++it) {
    PrimeField F{it % 2 ? 10007ull : 962592769ull};
    std::size_t n = 1 + it % 4;
    std::vector<std::size_t> d(n);
    std::size_t delta = 1;
    for (auto& x : d) {
      x = 1 + g() % (n > 2 ? 3 : 5);
      delta *= x;
    }
    PointSet S = random_equiprojectable(F, d, g);
    TriangularSet T = interpolate_triset(S, identity_order(n));
    TrisetConversion c = urep_from_triset(T, rng);
    check_parametrizes(c.urep, S);
    UrepConversion back = triset_from_urep(c.urep, identity_order(n), rng);
    CHECK(back.triset == T);
    // A different order matches the interpolation oracle when that order
    // is equiprojectable too.
    Order ord = identity_order(n);
    std::shuffle(ord.begin(), ord.end(), g);
    if (is_equiprojectable(S, ord)) {
      CHECK(triset_from_urep(c.urep, ord, rng).triset == interpolate_triset(S, ord));
    } else {
      CHECK(tt::errc_of([&] { triset_from_urep(c.urep, ord, rng); }) ==
            Errc::NotEquiprojectable);
    }
    // Reverse direction, compared through a shared separating form.
    UnivariateRep again = urep_from_triset(back.triset, rng).urep;
    CHECK(change_separating(again, c.urep.mu) == c.urep);
  }
  CHECK(rng.stats().exhausted == 0);
}

TEST_CASE("push and pull") {
  std::mt19937_64 g(14);
  Rng rng(6);
  PrimeField F{10007};
  for (int it = 0; it < 100; ++it) {
    std::size_t n = it < 80 ? 2 : 3;
    std::vector<std::size_t> d(n);
    for (auto& x : d) x = 1 + g() % (n == 2 ? 6 : 3);
    PointSet S = random_equiprojectable(F, d, g);
    TriangularSet T = interpolate_triset(S, identity_order(n));
    for (int dir = 0; dir < 2; ++dir) {
      TrisetConversion c = urep_from_triset(T, rng);
      ConversionReceipt r = c.receipt;
      UnivariateRep u = c.urep;
      if (dir == 1) {
        UrepConversion b = triset_from_urep(u, identity_order(n), rng);
        REQUIRE(b.triset == T);
        r = b.receipt;
      }
      CHECK(push_element(one_element(T), T, u, r) == Poly{1});
      CHECK(pull_element(Poly{1}, u, T, r) == one_element(T));
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> e(i + 1, 0);
        e[i] = 1;
        CHECK(push_element(reduce({{{std::vector<u32>(e.begin(), e.end()), 1}}}, T), T, u, r) ==
              u.U[i]);
      }
      ResidueElement a = tt::random_element(g, F, T.delta());
      Poly pa = push_element(a, T, u, r);
      CHECK(pull_element(pa, u, T, r) == a);
      // Values agree pointwise.
      for (const auto& x : S.points)
        CHECK(eval(F, pa, form_at(F, u.mu, x)) == eval_element(T, n, a, x));
    }
  }
  TriangularSet T = interpolate_triset(pts(F, {{1, 2}, {3, 4}}), identity_order(2));
  TrisetConversion c = urep_from_triset(T, rng);
  UnivariateRep other = c.urep;
  other.mu[0] = F.add(other.mu[0], 1);
  CHECK(tt::errc_of([&] { push_element(one_element(T), T, other, c.receipt); }) ==
        Errc::StaleConversionData);
  CHECK(tt::errc_of([&] { pull_element(Poly{1}, c.urep, prefix(T, 1), c.receipt); }) ==
        Errc::StaleConversionData);
}
