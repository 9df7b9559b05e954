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
#include "trideco/decomp.hpp"
#include "trideco/oracle.hpp"

using namespace trideco;

namespace {

const PrimeField F13{13};

PointSet pts(const PrimeField& F, std::vector<Point> v) {
  PointSet S;
  S.F = F;
  S.vars = default_vars(v[0].size());
  std::sort(v.begin(), v.end());
  S.points = std::move(v);
  return S;
}

// Number of points of S sharing x's first m coordinates.
std::size_t fiber_count(const PointSet& S, const Point& x, std::size_t m) {
  std::size_t c = 0;
  for (const auto& y : S.points) c += std::equal(x.begin(), x.begin() + m, y.begin());
  return c;
}

UnivariateRep separated(const PointSet& S, Rng& rng) {
  for (;;) {
    try {
      return urep_of_points(S, random_form(S.F, S.n(), S.size(), rng));
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("gamma examples") {
  Poly Q = from_roots(F13, {1, 2, 3});
  Poly A = from_roots(F13, {1, 2});
  CHECK(gamma(A, Q, Poly{0, 1}, F13) == A);
  CHECK(gamma(Poly{1}, Q, Poly{0, 1}, F13) == Poly{1});
  Poly N{4, 7, 1};
  Poly chi = char_poly(to_element(N, 3), univariate_triset(F13, Q));
  CHECK(gamma(chi, Q, N, F13) == Q);
}

TEST_CASE("phi_split examples") {
  Rng rng(1);
  PointSet V = pts(F13, {{1, 1}, {1, 2}, {2, 1}});
  UnivariateRep u = urep_of_points(V, {1, 2});
  CHECK(u.P == from_roots(F13, {3, 4, 5}));
  FiberSplit s = phi_split(u, {1}, rng);
  REQUIRE(s.parts.size() == 2);
  CHECK(s.parts[0].r == 1);
  CHECK(s.parts[0].u.P == from_roots(F13, {4}));
  CHECK(s.parts[1].r == 2);
  CHECK(s.parts[1].u.P == from_roots(F13, {3, 5}));
  CHECK(urep_points(s.parts[0].u).points == std::vector<Point>{{2, 1}});

  FiberSplit all = phi_split(u, {2}, rng);
  REQUIRE(all.parts.size() == 1);
  CHECK(all.parts[0].r == 1);
  CHECK(all.parts[0].u == u);

  UnivariateRep e = urep_of_points(pts(F13, {{1, 1}, {1, 2}}), {1, 1});
  FiberSplit one = phi_split(e, {1}, rng);
  REQUIRE(one.parts.size() == 1);
  CHECK(one.parts[0].u.P == e.P);
  CHECK(tt::errc_of([&] { phi_split(u, {0}, rng); }) == Errc::InvalidArgument);
}

TEST_CASE("phi_split against fiber counting") {
  std::mt19937_64 g(21);
  PrimeField F{10007};
  Rng rng(2);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 2 + it % 3;
    PointSet S = random_points(F, n, 1 + g() % 40, g);
    for (auto& x : S.points)
      for (std::size_t j = 0; j + 1 < n; ++j) x[j] %= 3;
    std::sort(S.points.begin(), S.points.end());
    S.points.erase(std::unique(S.points.begin(), S.points.end()), S.points.end());
    UnivariateRep u = separated(S, rng);
    std::size_t m = 1 + g() % (n - 1);
    DescentTrace tr;
    FiberSplit s = phi_split(u, {m}, rng, &tr);
    std::size_t total = 0;
    for (std::size_t k = 0; k < s.parts.size(); ++k) {
      if (k) CHECK(s.parts[k - 1].r < s.parts[k].r);
      total += s.parts[k].u.degree();
      check_urep(s.parts[k].u);
      for (const auto& x : urep_points(s.parts[k].u).points)
        CHECK(fiber_count(S, x, m) == s.parts[k].r);
      for (std::size_t l = 0; l < k; ++l)
        CHECK(deg(poly_gcd(F, s.parts[k].u.P, s.parts[l].u.P)) == 0);
    }
    CHECK(total == u.degree());
    // Descent invariants.
    for (std::size_t j = 0; j < tr.sum_deg_K.size(); ++j) {
      CHECK(tr.sum_deg_K[j] <= u.degree());
      CHECK(tr.sum_deg_gamma[j] <= u.degree());
    }
    for (std::size_t k = 1; k < tr.factors.size(); ++k)
      CHECK(tr.factors[k - 1].second < tr.factors[k].second);
    // Leaves agree with the plain one-shot gcd.
    for (std::size_t k = 0; k < tr.leaves.size(); ++k)
      CHECK(tr.leaves[k] == gamma(tr.factors[k].first, u.P, tr.N, F));
    std::size_t leaf_total = 0;
    for (const auto& l : tr.leaves) leaf_total += static_cast<std::size_t>(std::max(deg(l), 0));
    CHECK(leaf_total == u.degree());
  }
  CHECK(rng.stats().exhausted == 0);
}

TEST_CASE("equi_split examples") {
  Rng rng(3);
  UnivariateRep e = urep_of_points(pts(F13, {{1, 1}, {1, 2}}), {1, 1});
  CHECK(equi_split(e, {0, 1}, rng).size() == 1);
  auto three = equi_split(urep_of_points(pts(F13, {{1, 1}, {1, 2}, {2, 1}}), {1, 2}), {0, 1}, rng);
  REQUIRE(three.size() == 2);
  std::multiset<std::size_t> degs;
  for (const auto& v : three) degs.insert(v.degree());
  CHECK(degs == std::multiset<std::size_t>{1, 2});
  PrimeField F{101};
  auto fig = equi_split(
      urep_of_points(pts(F, {{1, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {3, 7}}), {1, 7}),
      {0, 1}, rng);
  degs.clear();
  for (const auto& v : fig) degs.insert(v.degree());
  CHECK(degs == std::multiset<std::size_t>{3, 4});
}

TEST_CASE("decompose_to_trisets examples") {
  Rng rng(4);
  Decomposition d =
      decompose_to_trisets(urep_of_points(pts(F13, {{1, 1}, {1, 2}, {2, 1}}), {1, 2}), {0, 1}, rng);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0] == make_triset(F13, {"X1", "X2"}, {{{11}, {1}}, {{12}, {1}}}));
  CHECK(d.components[1] == make_triset(F13, {"X1", "X2"}, {{{12}, {1}}, {{2}, {10}, {1}}}));
  CHECK(decompose_to_trisets(empty_urep(F13, {"X1", "X2"}), {0, 1}, rng).components.empty());

  std::mt19937_64 g(22);
  PrimeField F{10007};
  PointSet S = random_equiprojectable(F, {3, 2}, g);
  Decomposition one = decompose_to_trisets(separated(S, rng), {0, 1}, rng);
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0] == interpolate_triset(S, identity_order(2)));
}

TEST_CASE("decomposition matches the oracle and is canonical") {
  std::mt19937_64 g(23);
  PrimeField F{962592769};
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + it % 4;
    PointSet S = random_points(F, n, 1 + g() % 30, g);
    for (auto& x : S.points)
      for (auto& c : x) c %= 4;
    std::sort(S.points.begin(), S.points.end());
    S.points.erase(std::unique(S.points.begin(), S.points.end()), S.points.end());
    Order ord = identity_order(n);
    std::shuffle(ord.begin(), ord.end(), g);
    Rng r1(100 + it), r2(900 + it);
    UnivariateRep u = separated(S, r1);
    Decomposition d1 = decompose_to_trisets(u, ord, r1);
    Decomposition d2 = decompose_to_trisets(change_separating(u, random_form(F, n, 64, r2)) , ord, r2);
    CHECK(d1.components == d2.components);
    std::vector<TriangularSet> want;
    for (const auto& part : naive_equi_decompose(S, ord)) want.push_back(interpolate_triset(part, ord));
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
      return a.delta() != b.delta() ? a.delta() < b.delta() : a.polys < b.polys;
    });
    CHECK(d1.components == want);
    std::size_t total = 0;
    for (const auto& T : d1.components) total += T.delta();
    CHECK(total == S.size());
  }
}

TEST_CASE("split and combine") {
  std::mt19937_64 g(24);
  PrimeField F{10007};
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 2 + it % 2;
    PointSet S = random_points(F, n, 2 + g() % 15, g);
    for (auto& x : S.points) x[0] %= 3;
    std::sort(S.points.begin(), S.points.end());
    S.points.erase(std::unique(S.points.begin(), S.points.end()), S.points.end());
    UnivariateRep u = separated(S, rng);
    Decomposition d = decompose_to_trisets(u, identity_order(n), rng);
    auto ones = split_element(Poly{1}, u, d);
    for (std::size_t k = 0; k < ones.size(); ++k) CHECK(ones[k] == one_element(d.components[k]));
    auto xs = split_element(u.U[0], u, d);
    for (std::size_t k = 0; k < xs.size(); ++k)
      CHECK(xs[k] == reduce({{{{1}, 1}}}, d.components[k]));
    Poly a = tt::random_poly(g, F, static_cast<int>(u.degree()) - 1);
    normalize(a);
    CHECK(combine_elements(split_element(a, u, d), u, d) == a);
  }
  UnivariateRep u = urep_of_points(pts(F, {{1, 2}, {3, 4}}), {1, 1});
  Decomposition d = decompose_to_trisets(u, {0, 1}, rng);
  UnivariateRep v = u;
  v.mu = {1, 2};
  CHECK(tt::errc_of([&] { split_element(Poly{1}, v, d); }) == Errc::StaleConversionData);
}
