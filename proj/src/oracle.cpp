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

#include "trideco/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trideco/error.hpp"

namespace trideco {
namespace {

Point prefix_of(const Point& x, std::size_t k) {
  return Point(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
}

Poly powmod_x(const PrimeField& F, u64 e, const Poly& f) {
  Poly r{1}, b = poly_rem(F, Poly{0, 1}, f);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(F, r, b, f);
    if (e > 1) b = mulmod(F, b, b, f);
  }
  return r;
}

// Equal-degree splitting of a product of distinct linear factors.
void split_linear(const PrimeField& F, const Poly& g, std::mt19937_64& rng,
                  std::vector<u64>& out) {
  if (deg(g) == 0) return;
  if (deg(g) == 1) {
    out.push_back(F.neg(g[0]));
    return;
  }
  const u64 p = F.p();
  for (;;) {
    Poly h;
    if (p == 2) {
      // Both elements of F_2 are roots to be tested directly.
      for (u64 x = 0; x < 2; ++x)
        if (eval(F, g, x) == 0) out.push_back(x);
      return;
    }
    u64 a = rng() % p;
    Poly t = poly_rem(F, Poly{a, 1}, g);
    Poly r{1}, b = t;
    for (u64 e = (p - 1) / 2; e > 0; e >>= 1) {
      if (e & 1) r = mulmod(F, r, b, g);
      if (e > 1) b = mulmod(F, b, b, g);
    }
    r = sub(F, r, Poly{1});
    if (r.empty()) continue;
    h = poly_gcd(F, r, g);
    if (deg(h) <= 0 || deg(h) == deg(g)) continue;
    split_linear(F, h, rng, out);
    split_linear(F, poly_quo(F, g, h), rng, out);
    return;
  }
}

std::vector<u64> lagrange(const PrimeField& F, const std::vector<u64>& xs,
                          const std::vector<u64>& ys) {
  const std::size_t m = xs.size();
  std::vector<u64> out(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    Poly basis{1};
    u64 den = 1;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      basis = poly_mul(F, basis, Poly{F.neg(xs[k]), 1});
      den = F.mul(den, F.sub(xs[j], xs[k]));
    }
    u64 s = F.mul(ys[j], F.inv(den));
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] = F.add(out[i], F.mul(s, basis[i]));
  }
  return out;
}

// Element of R_{<=k} with the given values on the k-dimensional points,
// which must be V(T1..Tk).
ResidueElement interp_rec(const TriangularSet& T, std::size_t k, const std::vector<Point>& pts,
                          const std::vector<u64>& vals) {
  if (k == 0) return {vals.empty() ? 0 : vals[0]};
  std::map<Point, std::pair<std::vector<u64>, std::vector<u64>>> fibers;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto& f = fibers[prefix_of(pts[i], k - 1)];
    f.first.push_back(pts[i][k - 1]);
    f.second.push_back(vals[i]);
  }
  const std::size_t dk = T.d[k - 1];
  std::vector<Point> base;
  std::vector<std::vector<u64>> coeffs(dk);
  for (const auto& [q, f] : fibers) {
    if (f.first.size() != dk) raise(Errc::NotEquiprojectable, "fiber size differs from the degree");
    base.push_back(q);
    std::vector<u64> c = lagrange(T.F, f.first, f.second);
    for (std::size_t a = 0; a < dk; ++a) coeffs[a].push_back(c[a]);
  }
  const std::size_t db = T.delta_below(k - 1);
  ResidueElement out(dk * db, 0);
  for (std::size_t a = 0; a < dk; ++a) {
    ResidueElement e = interp_rec(T, k - 1, base, coeffs[a]);
    std::copy(e.begin(), e.end(), out.begin() + static_cast<std::ptrdiff_t>(a * db));
  }
  return out;
}

}  // namespace

Order identity_order(std::size_t n) {
  Order o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

std::vector<u64> split_roots(const PrimeField& F, const Poly& f) {
  if (deg(f) < 0) raise(Errc::InvalidArgument, "zero polynomial");
  std::vector<u64> roots;
  const u64 p = F.p();
  if (p <= 100000) {
    for (u64 x = 0; x < p && roots.size() < static_cast<std::size_t>(deg(f)); ++x)
      if (eval(F, f, x) == 0) roots.push_back(x);
  } else if (deg(f) > 0) {
    Poly xp = powmod_x(F, p, f);
    Poly g = poly_gcd(F, sub(F, xp, Poly{0, 1}), f);
    std::mt19937_64 rng(0x5eed);
    split_linear(F, g, rng, roots);
  }
  if (roots.size() != static_cast<std::size_t>(deg(f)))
    raise(Errc::NotSplit, "polynomial does not split into distinct linear factors");
  std::sort(roots.begin(), roots.end());
  return roots;
}

PointSet enumerate_points(const TriangularSet& T) {
  validate(T);
  PointSet S;
  S.F = T.F;
  S.vars = T.vars;
  std::vector<Point> cur{Point{}};
  for (std::size_t i = 0; i < T.n(); ++i) {
    std::vector<Point> next;
    for (const auto& x : cur) {
      Poly f(T.d[i] + 1);
      for (std::size_t a = 0; a <= T.d[i]; ++a) f[a] = eval_element(T, i, T.coeff(i, a), x);
      for (u64 r : split_roots(T.F, f)) {
        Point y = x;
        y.push_back(r);
        next.push_back(std::move(y));
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  S.points = std::move(cur);
  return S;
}

Point permute_point(const Point& x, const Order& order) {
  Point y(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) y[k] = x[order[k]];
  return y;
}

PointSet permute(const PointSet& S, const Order& order) {
  PointSet r;
  r.F = S.F;
  for (auto j : order) r.vars.push_back(S.vars[j]);
  for (const auto& x : S.points) r.points.push_back(permute_point(x, order));
  return r;
}

bool is_equiprojectable(const PointSet& S, const Order& order) {
  PointSet P = permute(S, order);
  for (std::size_t i = 1; i < P.n(); ++i) {
    std::map<Point, std::size_t> cnt;
    for (const auto& x : P.points) ++cnt[prefix_of(x, i)];
    std::set<std::size_t> sizes;
    for (const auto& [q, c] : cnt) sizes.insert(c);
    if (sizes.size() > 1) return false;
  }
  return true;
}

TriangularSet interpolate_triset(const PointSet& S, const Order& order) {
  if (S.points.empty()) raise(Errc::InvalidArgument, "empty point set has no triangular set");
  if (!is_equiprojectable(S, order)) raise(Errc::NotEquiprojectable, "point set is not equiprojectable");
  PointSet P = permute(S, order);
  const std::size_t n = P.n();
  TriangularSet T;
  T.F = S.F;
  T.vars = P.vars;
  for (std::size_t i = 0; i < n; ++i) {
    // Distinct (i+1)-prefixes grouped by their i-prefix.
    std::map<Point, std::set<u64>> fibers;
    for (const auto& x : P.points) fibers[prefix_of(x, i)].insert(x[i]);
    const std::size_t di = fibers.begin()->second.size();
    T.d.push_back(di);
    std::vector<Point> base;
    std::vector<std::vector<u64>> coeffs(di + 1);
    for (const auto& [q, vs] : fibers) {
      base.push_back(q);
      Poly f = from_roots(T.F, std::vector<u64>(vs.begin(), vs.end()));
      for (std::size_t a = 0; a <= di; ++a) coeffs[a].push_back(coeff(f, a));
    }
    const std::size_t db = T.delta_below(i);
    std::vector<u64> flat((di + 1) * db, 0);
    for (std::size_t a = 0; a <= di; ++a) {
      ResidueElement e = interp_rec(T, i, base, coeffs[a]);
      std::copy(e.begin(), e.end(), flat.begin() + static_cast<std::ptrdiff_t>(a * db));
    }
    T.polys.push_back(std::move(flat));
  }
  validate(T);
  return T;
}

ResidueElement interpolate_element(const TriangularSet& T, const std::vector<Point>& points,
                                   const std::vector<u64>& values) {
  if (points.size() != T.delta() || values.size() != points.size())
    raise(Errc::LengthMismatch, "need one value per point of V(T)");
  return interp_rec(T, T.n(), points, values);
}

std::vector<PointSet> naive_equi_decompose(const PointSet& S, const Order& order) {
  PointSet P = permute(S, order);
  std::vector<std::vector<Point>> parts;
  if (!P.points.empty()) parts.push_back(P.points);
  for (std::size_t i = P.n(); i-- > 1;) {
    std::vector<std::vector<Point>> next;
    for (const auto& part : parts) {
      std::map<Point, std::size_t> cnt;
      for (const auto& x : part) ++cnt[prefix_of(x, i)];
      std::map<std::size_t, std::vector<Point>> by_count;
      for (const auto& x : part) by_count[cnt[prefix_of(x, i)]].push_back(x);
      for (auto& [c, v] : by_count) next.push_back(std::move(v));
    }
    parts = std::move(next);
  }
  // Back to the caller's coordinates.
  std::vector<PointSet> out;
  for (auto& part : parts) {
    PointSet r;
    r.F = S.F;
    r.vars = S.vars;
    for (const auto& y : part) {
      Point x(y.size());
      for (std::size_t k = 0; k < order.size(); ++k) x[order[k]] = y[k];
      r.points.push_back(std::move(x));
    }
    std::sort(r.points.begin(), r.points.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.points < b.points;
  });
  return out;
}

ResidueElement naive_modcomp(const std::vector<u64>& Fc, const DegreeBounds& bounds,
                             const std::vector<ResidueElement>& G, const TriangularSet& T) {
  const PrimeField& F = T.F;
  PointSet S = enumerate_points(T);
  const std::size_t f1 = bounds.f.at(0), f2 = bounds.f.size() > 1 ? bounds.f[1] : 1;
  std::vector<u64> vals;
  for (const auto& x : S.points) {
    u64 y1 = eval_element(T, T.n(), G.at(0), x);
    u64 y2 = G.size() > 1 ? eval_element(T, T.n(), G[1], x) : 0;
    u64 acc = 0;
    for (std::size_t c2 = f2; c2-- > 0;) {
      u64 inner = 0;
      for (std::size_t c1 = f1; c1-- > 0;) inner = F.add(F.mul(inner, y1), Fc[c1 + f1 * c2]);
      acc = F.add(F.mul(acc, y2), inner);
    }
    vals.push_back(acc);
  }
  return interpolate_element(T, S.points, vals);
}

std::vector<u64> naive_powproj(const LinearForm& l, const std::vector<ResidueElement>& G,
                               const DegreeBounds& bounds, const TriangularSet& T) {
  const std::size_t f1 = bounds.f.at(0), f2 = bounds.f.size() > 1 ? bounds.f[1] : 1;
  std::vector<u64> out(f1 * f2);
  ResidueElement p2 = one_element(T);
  for (std::size_t c2 = 0; c2 < f2; ++c2) {
    ResidueElement p1 = p2;
    for (std::size_t c1 = 0; c1 < f1; ++c1) {
      out[c1 + f1 * c2] = apply_form(T.F, l, p1);
      p1 = tower_mul(T, T.n(), p1, G.at(0));
    }
    if (G.size() > 1) p2 = tower_mul(T, T.n(), p2, G[1]);
  }
  return out;
}

LinearForm naive_trace(const TriangularSet& T) {
  PointSet S = enumerate_points(T);
  LinearForm tr(T.delta(), 0);
  for (std::size_t i = 0; i < T.delta(); ++i) {
    ResidueElement m(T.delta(), 0);
    m[i] = 1;
    for (const auto& x : S.points) tr[i] = T.F.add(tr[i], eval_element(T, T.n(), m, x));
  }
  return tr;
}

Poly naive_char_poly(const ResidueElement& A, const TriangularSet& T) {
  PointSet S = enumerate_points(T);
  std::vector<u64> vals;
  for (const auto& x : S.points) vals.push_back(eval_element(T, T.n(), A, x));
  return from_roots(T.F, vals);
}

PointSet random_points(const PrimeField& F, std::size_t n, std::size_t k, std::mt19937_64& g) {
  PointSet S;
  S.F = F;
  S.vars = default_vars(n);
  std::set<Point> seen;
  while (seen.size() < k) {
    Point x(n);
    for (auto& c : x) c = g() % F.p();
    seen.insert(x);
  }
  S.points.assign(seen.begin(), seen.end());
  return S;
}

PointSet random_equiprojectable(const PrimeField& F, const std::vector<std::size_t>& d,
                                std::mt19937_64& g) {
  PointSet S;
  S.F = F;
  S.vars = default_vars(d.size());
  std::vector<Point> cur{Point{}};
  for (std::size_t di : d) {
    if (di > F.p()) raise(Errc::InvalidArgument, "fiber larger than the field");
    std::vector<Point> next;
    for (const auto& x : cur) {
      std::set<u64> vs;
      while (vs.size() < di) vs.insert(g() % F.p());
      for (u64 v : vs) {
        Point y = x;
        y.push_back(v);
        next.push_back(std::move(y));
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  S.points = std::move(cur);
  return S;
}

std::vector<TriangularSet> random_split_family(const PrimeField& F, std::size_t n,
                                               std::size_t k, std::mt19937_64& g) {
  PointSet S = random_points(F, n, k, g);
  std::vector<TriangularSet> out;
  Order id = identity_order(n);
  for (const auto& part : naive_equi_decompose(S, id)) out.push_back(interpolate_triset(part, id));
  return out;
}

UnivariateRep urep_of_points(const PointSet& S, const std::vector<u64>& mu) {
  const PrimeField& F = S.F;
  if (mu.size() != S.n()) raise(Errc::LengthMismatch, "form has the wrong arity");
  UnivariateRep u = empty_urep(F, S.vars);
  u.mu = mu;
  if (S.points.empty()) return u;
  std::vector<u64> z;
  for (const auto& x : S.points) {
    u64 v = 0;
    for (std::size_t i = 0; i < S.n(); ++i) v = F.add(v, F.mul(mu[i], x[i]));
    z.push_back(v);
  }
  std::vector<u64> zs = z;
  std::sort(zs.begin(), zs.end());
  if (std::adjacent_find(zs.begin(), zs.end()) != zs.end())
    raise(Errc::NotSeparating, "form collides on two points");
  u.P = from_roots(F, z);
  for (std::size_t i = 0; i < S.n(); ++i) {
    std::vector<u64> ys;
    for (const auto& x : S.points) ys.push_back(x[i]);
    Poly c = lagrange(F, z, ys);
    normalize(c);
    u.U[i] = c;
  }
  return u;
}

PointSet urep_points(const UnivariateRep& u) {
  PointSet S;
  S.F = u.F;
  S.vars = u.vars;
  if (u.empty()) return S;
  for (u64 z : split_roots(u.F, u.P)) {
    Point x;
    for (const auto& c : u.U) x.push_back(eval(u.F, c, z));
    S.points.push_back(x);
  }
  std::sort(S.points.begin(), S.points.end());
  return S;
}

}  // namespace trideco
