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

#include "trideco/ptree.hpp"

#include "trideco/error.hpp"

namespace trideco {

SubproductTree build_subproduct_tree(const PrimeField& F,
                                     const std::vector<Poly>& leaves) {
  if (leaves.empty()) raise(Errc::EmptyLeafSet, "subproduct tree needs a leaf");
  std::size_t width = 1;
  while (width < leaves.size()) width <<= 1;
  std::vector<Poly> row(width, Poly{1});
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].empty() || leaves[i].back() != 1) {
      raise(Errc::InvalidArgument, "subproduct tree leaves must be monic");
    }
    row[i] = leaves[i];
  }
  SubproductTree t;
  t.leaf_count = leaves.size();
  std::vector<std::vector<Poly>> up{row};
  while (up.back().size() > 1) {
    const auto& cur = up.back();
    std::vector<Poly> next(cur.size() / 2);
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] = poly_mul(F, cur[2 * i], cur[2 * i + 1]);
    up.push_back(std::move(next));
  }
  t.levels.assign(up.rbegin(), up.rend());
  return t;
}

std::vector<Poly> multi_reduce(const PrimeField& F, const Poly& a,
                               const SubproductTree& tree) {
  std::vector<Poly> cur{poly_rem(F, a, tree.root())};
  for (std::size_t j = 1; j < tree.levels.size(); ++j) {
    const auto& lv = tree.levels[j];
    std::vector<Poly> next(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) next[i] = poly_rem(F, cur[i / 2], lv[i]);
    cur = std::move(next);
  }
  cur.resize(tree.leaf_count);
  return cur;
}

std::vector<Poly> multi_reduce(const PrimeField& F, const Poly& a,
                               const std::vector<Poly>& moduli) {
  if (moduli.empty()) return {};
  std::vector<Poly> mon(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) mon[i] = monic(F, moduli[i]);
  return multi_reduce(F, a, build_subproduct_tree(F, mon));
}

Poly crt_combine(const PrimeField& F, const std::vector<Poly>& residues,
                 const std::vector<Poly>& moduli) {
  if (residues.size() != moduli.size()) {
    raise(Errc::LengthMismatch, "residue and modulus counts differ");
  }
  if (moduli.empty()) return {};
  std::vector<Poly> mon(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) mon[i] = monic(F, moduli[i]);
  SubproductTree t = build_subproduct_tree(F, mon);
  const std::size_t w = t.depth();
  // cof[i] = (root / K_i) mod K_i, pushed down one level at a time.
  std::vector<Poly> cof{Poly{1}};
  for (std::size_t j = 1; j <= w; ++j) {
    const auto& lv = t.levels[j];
    std::vector<Poly> next(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
      const Poly& sib = lv[i ^ 1];
      next[i] = deg(lv[i]) == 0 ? Poly{} : mulmod(F, cof[i / 2], sib, lv[i]);
    }
    cof = std::move(next);
  }
  std::vector<Poly> val(t.levels[w].size());
  for (std::size_t i = 0; i < val.size(); ++i) {
    const Poly& m = t.levels[w][i];
    if (deg(m) == 0) continue;
    Poly r = poly_rem(F, i < residues.size() ? residues[i] : Poly{}, m);
    if (r.empty()) continue;
    Poly g = poly_gcd(F, cof[i], m);
    if (deg(g) != 0) raise(Errc::NonCoprimeModuli, "CRT moduli share a factor");
    val[i] = mulmod(F, r, invmod(F, cof[i], m), m);
  }
  for (std::size_t j = w; j-- > 0;) {
    const auto& child = t.levels[j + 1];
    std::vector<Poly> next(t.levels[j].size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = add(F, poly_mul(F, val[2 * i], child[2 * i + 1]),
                    poly_mul(F, val[2 * i + 1], child[2 * i]));
    }
    val = std::move(next);
  }
  return val[0];
}

std::vector<u64> power_sums(const PrimeField& F, const Poly& a, std::size_t n) {
  std::size_t d = static_cast<std::size_t>(deg(a));
  Poly num = d == 0 ? Poly{} : rev(derivative(F, a), d - 1);
  Poly s = mul_trunc(F, num, series_inv(F, rev(a, d), n), n);
  s.resize(n, 0);
  return s;
}

Poly poly_from_power_sums(const PrimeField& F, const std::vector<u64>& s,
                          std::size_t d) {
  if (s.size() < d) raise(Errc::LengthMismatch, "fewer power sums than the degree");
  if (F.p() <= d) raise(Errc::CharacteristicTooSmall, "need p > d to divide by 1..d");
  Poly h(d + 1, 0);
  for (std::size_t i = 1; i <= d; ++i)
    h[i] = F.neg(F.mul(s[i - 1], F.inv(F.reduce(i))));
  normalize(h);
  Poly e = series_exp(F, h, d + 1);
  e.resize(d + 1, 0);
  Poly r(d + 1);
  for (std::size_t i = 0; i <= d; ++i) r[d - i] = e[i];
  normalize(r);
  return r;
}

std::vector<u64> transposed_multi_reduce(const PrimeField& F,
                                         const std::vector<std::vector<u64>>& forms,
                                         const std::vector<Poly>& moduli,
                                         std::size_t e) {
  if (forms.size() != moduli.size()) raise(Errc::LengthMismatch, "form/modulus counts differ");
  // Each l_i(X^j mod R_i) sequence is N_i / rev(R_i) as a power series.
  std::vector<std::pair<Poly, Poly>> frac;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    Poly R = monic(F, moduli[i]);
    std::size_t k = static_cast<std::size_t>(deg(R));
    if (forms[i].size() != k) raise(Errc::LengthMismatch, "form length differs from degree");
    Poly D = rev(R, k);
    Poly v(forms[i].begin(), forms[i].end());
    normalize(v);
    frac.emplace_back(mul_trunc(F, v, D, k), D);
  }
  if (frac.empty()) return std::vector<u64>(e, 0);
  while (frac.size() > 1) {
    std::vector<std::pair<Poly, Poly>> next;
    for (std::size_t i = 0; i + 1 < frac.size(); i += 2) {
      const auto& [n1, d1] = frac[i];
      const auto& [n2, d2] = frac[i + 1];
      next.emplace_back(add(F, poly_mul(F, n1, d2), poly_mul(F, n2, d1)),
                        poly_mul(F, d1, d2));
    }
    if (frac.size() % 2) next.push_back(frac.back());
    frac = std::move(next);
  }
  Poly s = mul_trunc(F, frac[0].first, series_inv(F, frac[0].second, e), e);
  s.resize(e, 0);
  return s;
}

}  // namespace trideco
