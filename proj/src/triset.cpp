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

#include "trideco/triset.hpp"

#include <algorithm>

#include "trideco/error.hpp"

namespace trideco {
namespace {

bool is_zero(const std::vector<u64>& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

// Reduces a dense tensor over X1..Xk to R_{<=k}.
std::vector<u64> reduce_level(const TriangularSet& T, std::size_t k,
                              const std::vector<u64>& a,
                              const std::vector<std::size_t>& shape) {
  if (k == 0) return {a.empty() ? 0 : a[0]};
  const PrimeField& F = T.F;
  std::size_t inner = 1;
  for (std::size_t j = 0; j + 1 < k; ++j) inner *= shape[j];
  std::vector<std::size_t> sub_shape(shape.begin(), shape.begin() + static_cast<std::ptrdiff_t>(k - 1));
  const std::size_t D = shape[k - 1];
  const std::size_t dk = T.d[k - 1];
  const std::size_t db = T.delta_below(k - 1);
  std::vector<std::vector<u64>> slots(std::max(D, dk), std::vector<u64>(db, 0));
  for (std::size_t s = 0; s < D; ++s) {
    std::vector<u64> slice(a.begin() + static_cast<std::ptrdiff_t>(s * inner),
                           a.begin() + static_cast<std::ptrdiff_t>((s + 1) * inner));
    slots[s] = reduce_level(T, k - 1, slice, sub_shape);
  }
  for (std::size_t s = D; s-- > dk;) {
    if (is_zero(slots[s])) continue;
    for (std::size_t j = 0; j < dk; ++j) {
      std::vector<u64> tj = T.coeff(k - 1, j);
      if (is_zero(tj)) continue;
      std::vector<u64> prod = tower_mul(T, k - 1, slots[s], tj);
      auto& dst = slots[s - dk + j];
      for (std::size_t r = 0; r < db; ++r) dst[r] = F.sub(dst[r], prod[r]);
    }
  }
  std::vector<u64> out;
  out.reserve(dk * db);
  for (std::size_t s = 0; s < dk; ++s) out.insert(out.end(), slots[s].begin(), slots[s].end());
  return out;
}

}  // namespace

std::vector<u64> TriangularSet::coeff(std::size_t i, std::size_t a) const {
  std::size_t db = delta_below(i);
  return std::vector<u64>(polys[i].begin() + static_cast<std::ptrdiff_t>(a * db),
                          polys[i].begin() + static_cast<std::ptrdiff_t>((a + 1) * db));
}

void validate(const TriangularSet& T) {
  if (T.n() == 0) raise(Errc::InvalidArgument, "triangular set needs a variable");
  if (T.vars.size() != T.n() || T.polys.size() != T.n()) {
    raise(Errc::InvalidArgument, "inconsistent triangular set shape");
  }
  for (std::size_t i = 0; i < T.n(); ++i) {
    if (T.d[i] == 0) raise(Errc::InvalidArgument, "main degree must be positive");
    std::size_t db = T.delta_below(i);
    if (T.polys[i].size() != (T.d[i] + 1) * db) raise(Errc::InvalidArgument, "bad tensor length");
    for (u64 c : T.polys[i])
      if (c >= T.F.p()) raise(Errc::InvalidArgument, "coefficient not reduced mod p");
    std::vector<u64> lead = T.coeff(i, T.d[i]);
    if (lead[0] != 1 || !std::all_of(lead.begin() + 1, lead.end(), [](u64 x) { return x == 0; })) {
      raise(Errc::InvalidArgument, "polynomial is not monic in its main variable");
    }
  }
}

TriangularSet make_triset(const PrimeField& F, std::vector<std::string> vars,
                          const std::vector<std::vector<std::vector<u64>>>& coeffs) {
  TriangularSet T;
  T.F = F;
  T.vars = std::move(vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].size() < 2) raise(Errc::InvalidArgument, "main degree must be positive");
    T.d.push_back(coeffs[i].size() - 1);
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::size_t db = T.delta_below(i);
    std::vector<u64> flat;
    for (const auto& c : coeffs[i]) {
      if (c.size() > db) raise(Errc::InvalidArgument, "coefficient is not reduced");
      std::vector<u64> e(db, 0);
      for (std::size_t r = 0; r < c.size(); ++r) e[r] = F.reduce(c[r]);
      flat.insert(flat.end(), e.begin(), e.end());
    }
    T.polys.push_back(std::move(flat));
  }
  validate(T);
  return T;
}

TriangularSet univariate_triset(const PrimeField& F, const Poly& P, std::string var) {
  if (deg(P) < 1 || P.back() != 1) raise(Errc::InvalidArgument, "need a monic polynomial of positive degree");
  TriangularSet T;
  T.F = F;
  T.vars = {std::move(var)};
  T.d = {P.size() - 1};
  T.polys = {P};
  return T;
}

TriangularSet prefix(const TriangularSet& T, std::size_t k) {
  TriangularSet r;
  r.F = T.F;
  r.vars.assign(T.vars.begin(), T.vars.begin() + static_cast<std::ptrdiff_t>(k));
  r.d.assign(T.d.begin(), T.d.begin() + static_cast<std::ptrdiff_t>(k));
  r.polys.assign(T.polys.begin(), T.polys.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

std::vector<std::string> default_vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("X" + std::to_string(i + 1));
  return v;
}

ResidueElement reduce_dense(const TriangularSet& T, const std::vector<u64>& a,
                            const std::vector<std::size_t>& shape) {
  if (shape.size() > T.n()) raise(Errc::VariableNotInRing, "tensor has more variables than T");
  std::vector<u64> r = reduce_level(T, shape.size(), a, shape);
  r.resize(T.delta(), 0);
  return r;
}

ResidueElement reduce(const RawPoly& a, const TriangularSet& T) {
  const std::size_t n = T.n();
  std::vector<std::size_t> shape(n, 1);
  for (const auto& t : a.terms) {
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      if (t.exps[j] == 0) continue;
      if (j >= n) raise(Errc::VariableNotInRing, "variable index beyond the ring");
      shape[j] = std::max<std::size_t>(shape[j], t.exps[j] + 1);
    }
  }
  std::size_t total = 1;
  for (auto s : shape) total *= s;
  std::vector<u64> dense(total, 0);
  for (const auto& t : a.terms) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t e = j < t.exps.size() ? t.exps[j] : 0;
      idx += e * stride;
      stride *= shape[j];
    }
    dense[idx] = T.F.add(dense[idx], T.F.reduce(t.c));
  }
  return reduce_level(T, n, dense, shape);
}

ResidueElement tower_mul(const TriangularSet& T, std::size_t k,
                         const ResidueElement& a, const ResidueElement& b) {
  if (k == 0) return {T.F.mul(a[0], b[0])};
  // Kronecker packing with extents 2 d_j - 1 is exactly the dense product.
  std::vector<std::size_t> shape(k);
  std::vector<std::size_t> stride(k);
  std::size_t s = 1;
  for (std::size_t j = 0; j < k; ++j) {
    stride[j] = s;
    shape[j] = 2 * T.d[j] - 1;
    s *= shape[j];
  }
  const std::size_t dl = T.delta_below(k);
  auto pack = [&](const ResidueElement& x) {
    Poly out(s, 0);
    for (std::size_t idx = 0; idx < dl; ++idx) {
      if (x[idx] == 0) continue;
      std::size_t rem = idx, pos = 0;
      for (std::size_t j = 0; j < k; ++j) {
        pos += (rem % T.d[j]) * stride[j];
        rem /= T.d[j];
      }
      out[pos] = x[idx];
    }
    normalize(out);
    return out;
  };
  Poly c = poly_mul(T.F, pack(a), pack(b));
  c.resize(s, 0);
  return reduce_level(T, k, c, shape);
}

ResidueElement basis_monomial(const TriangularSet& T, std::size_t k,
                              const std::vector<std::size_t>& exps) {
  ResidueElement e(T.delta_below(k), 0);
  std::size_t idx = 0, stride = 1;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t x = j < exps.size() ? exps[j] : 0;
    if (x >= T.d[j]) raise(Errc::InvalidArgument, "exponent outside the basis");
    idx += x * stride;
    stride *= T.d[j];
  }
  e[idx] = 1 % T.F.p();
  return e;
}

ResidueElement one_element(const TriangularSet& T) {
  return basis_monomial(T, T.n(), {});
}

u64 apply_form(const PrimeField& F, const LinearForm& l, const ResidueElement& a) {
  if (l.size() != a.size()) raise(Errc::LengthMismatch, "form and element sizes differ");
  u64 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(l[i], a[i]));
  return acc;
}

ResidueElement to_element(const Poly& a, std::size_t delta) {
  if (a.size() > delta) raise(Errc::InvalidArgument, "polynomial not reduced for this ring");
  ResidueElement e(a.begin(), a.end());
  e.resize(delta, 0);
  return e;
}

Poly to_poly(const ResidueElement& a) {
  Poly p(a.begin(), a.end());
  normalize(p);
  return p;
}

u64 eval_element(const TriangularSet& T, std::size_t k, const ResidueElement& a,
                 const std::vector<u64>& pt) {
  if (k == 0) return a[0];
  const std::size_t db = T.delta_below(k - 1);
  u64 acc = 0;
  for (std::size_t s = T.d[k - 1]; s-- > 0;) {
    std::vector<u64> slice(a.begin() + static_cast<std::ptrdiff_t>(s * db),
                           a.begin() + static_cast<std::ptrdiff_t>((s + 1) * db));
    acc = T.F.add(T.F.mul(acc, pt[k - 1]), eval_element(T, k - 1, slice, pt));
  }
  return acc;
}

}  // namespace trideco
