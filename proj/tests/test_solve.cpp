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
#include "trideco/solve.hpp"

using namespace trideco;

namespace {

const PrimeField F13{13};

std::vector<TriangularSet> sorted_oracle(const std::vector<Point>& pts, const PrimeField& F,
                                         std::size_t n, const Order& ord) {
  std::vector<TriangularSet> out;
  if (pts.empty()) return out;
  PointSet S;
  S.F = F;
  S.vars = default_vars(n);
  S.points = pts;
  std::sort(S.points.begin(), S.points.end());
  for (const auto& part : naive_equi_decompose(S, ord)) out.push_back(interpolate_triset(part, ord));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.delta() != b.delta() ? a.delta() < b.delta() : a.polys < b.polys;
  });
  return out;
}

std::set<Point> points_of(const std::vector<TriangularSet>& Ts, const Order& ord) {
  // Back to source coordinates: component coordinate k is variable ord[k].
  std::set<Point> s;
  for (const auto& T : Ts)
    for (const auto& x : enumerate_points(T).points) {
      Point y(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) y[ord[k]] = x[k];
      s.insert(y);
    }
  return s;
}

}  // namespace

TEST_CASE("solve_p1 examples") {
  Rng rng(1);
  TriangularSet A = make_triset(F13, {"X1", "X2"}, {{{12}, {1}}, {{2}, {10}, {1}}});
  TriangularSet B = make_triset(F13, {"X1", "X2"}, {{{11}, {1}}, {{12}, {1}}});
  Decomposition same = solve_p1({{A}, {}, {0, 1}}, rng);
  CHECK(same.components == std::vector<TriangularSet>{A});

  Decomposition sw = solve_p1({{A, B}, {}, {1, 0}}, rng);
  REQUIRE(sw.components.size() == 2);
  CHECK(sw.components[0] == make_triset(F13, {"X2", "X1"}, {{{11}, {1}}, {{12}, {1}}}));
  CHECK(sw.components[1] == make_triset(F13, {"X2", "X1"}, {{{12}, {1}}, {{2}, {10}, {1}}}));

  PrimeField F101{101};
  TriangularSet A101 = make_triset(F101, {"X1", "X2"}, {{{100}, {1}}, {{2}, {98}, {1}}});
  CHECK(solve_p1({{A101}, {A101}, {0, 1}}, rng).components.empty());
  CHECK(tt::errc_of([&] { solve_p1({{A, A, B}, {}, {0, 1}}, rng); }) ==
        Errc::CharacteristicTooSmall);
}

TEST_CASE("solve_p1 against the combinatorial oracle") {
  std::mt19937_64 g(31);
  PrimeField F{962592769};
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + it % 3;
    std::vector<TriangularSet> plus = random_split_family(F, n, 1 + g() % 12, g);
    std::vector<TriangularSet> minus = random_split_family(F, n, 1 + g() % 8, g);
    // Share some points between the families.
    std::set<Point> P, M;
    for (const auto& T : plus)
      for (const auto& x : enumerate_points(T).points) P.insert(x);
    if (!P.empty() && g() % 2) {
      PointSet S;
      S.F = F;
      S.vars = default_vars(n);
      S.points.push_back(*P.begin());
      minus.push_back(interpolate_triset(S, identity_order(n)));
    }
    for (const auto& T : minus)
      for (const auto& x : enumerate_points(T).points) M.insert(x);
    std::vector<Point> want;
    for (const auto& x : P)
      if (!M.count(x)) want.push_back(x);
    Order ord = identity_order(n);
    std::shuffle(ord.begin(), ord.end(), g);
    std::vector<Point> want_perm;
    for (const auto& x : want) want_perm.push_back(permute_point(x, ord));
    Rng r1(it), r2(1000 + it);
    Decomposition d = solve_p1({plus, minus, ord}, r1);
    auto exp = sorted_oracle(want_perm, F, n, identity_order(n));
    for (auto& T : exp) {
      std::vector<std::string> v;
      for (auto k : ord) v.push_back("X" + std::to_string(k + 1));
      T.vars = v;
    }
    CHECK(d.components == exp);
    CHECK(solve_p1({plus, minus, ord}, r2).components == d.components);
    // Idempotent: feeding the output back returns it.
    if (!d.components.empty() && ord == identity_order(n))
      CHECK(solve_p1({d.components, {}, ord}, r2).components == d.components);
    CHECK(points_of(d.components, ord) == std::set<Point>(want.begin(), want.end()));
  }
}

TEST_CASE("solve_p2 examples") {
  Rng rng(2);
  TriangularSet T = make_triset(F13, {"X1", "X2"}, {{{2}, {10}, {1}}, {{12}, {1}}});
  ResidueElement f = reduce({{{{1}, 1}, {{0}, 12}}}, T);  // X1 - 1
  P2Answer a = solve_p2(T, f, {0, 1}, rng);
  CHECK(a.on_zero.components ==
        std::vector<TriangularSet>{make_triset(F13, {"X1", "X2"}, {{{12}, {1}}, {{12}, {1}}})});
  CHECK(a.off_zero.components ==
        std::vector<TriangularSet>{make_triset(F13, {"X1", "X2"}, {{{11}, {1}}, {{12}, {1}}})});
  REQUIRE(a.inverses.size() == 1);
  CHECK(a.inverses[0] == ResidueElement{1});

  P2Answer z = solve_p2(T, ResidueElement(2, 0), {0, 1}, rng);
  CHECK(z.off_zero.components.empty());
  CHECK(z.inverses.empty());
  CHECK(z.on_zero.components.size() == 1);

  P2Answer o = solve_p2(T, one_element(T), {0, 1}, rng);
  CHECK(o.on_zero.components.empty());
  CHECK(o.off_zero.components == std::vector<TriangularSet>{T});
  CHECK(o.inverses == std::vector<ResidueElement>{one_element(T)});
}

TEST_CASE("solve_p2 splits along the zero set") {
  std::mt19937_64 g(32);
  PrimeField F{10007};
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + it % 3;
    std::vector<std::size_t> d(n);
    for (auto& x : d) x = 1 + g() % 3;
    PointSet S = random_equiprojectable(F, d, g);
    TriangularSet T = interpolate_triset(S, identity_order(n));
    // F vanishes on a random subset of the points.
    std::vector<u64> vals;
    std::set<Point> zeros;
    for (const auto& x : S.points) {
      bool z = g() % 2;
      vals.push_back(z ? 0 : 1 + g() % (F.p() - 1));
      if (z) zeros.insert(x);
    }
    ResidueElement f = interpolate_element(T, S.points, vals);
    Order ord = identity_order(n);
    std::shuffle(ord.begin(), ord.end(), g);
    Rng rng(it);
    P2Answer a = solve_p2(T, f, ord, rng);
    std::size_t total = 0;
    for (const auto* dd : {&a.on_zero, &a.off_zero})
      for (const auto& C : dd->components) total += C.delta();
    CHECK(total == T.delta());
    CHECK(points_of(a.on_zero.components, ord) == zeros);
    std::set<Point> rest;
    for (const auto& x : S.points)
      if (!zeros.count(x)) rest.insert(x);
    CHECK(points_of(a.off_zero.components, ord) == rest);
    // Each inverse times F restricted to its component is one.
    REQUIRE(a.inverses.size() == a.off_zero.components.size());
    for (std::size_t k = 0; k < a.inverses.size(); ++k) {
      const TriangularSet& C = a.off_zero.components[k];
      for (const auto& x : enumerate_points(C).points) {
        Point y(n);
        for (std::size_t j = 0; j < n; ++j) y[ord[j]] = x[j];
        CHECK(F.mul(eval_element(T, n, f, y), eval_element(C, n, a.inverses[k], x)) == 1);
      }
    }
  }
}
