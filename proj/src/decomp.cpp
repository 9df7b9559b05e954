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

#include "trideco/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "trideco/error.hpp"
#include "trideco/ptree.hpp"
#include "urep_internal.hpp"

namespace trideco {

Poly gamma(const Poly& A, const Poly& Q, const Poly& N_mod_Q, const PrimeField& F) {
  if (deg(Q) <= 0) return Poly{1};
  if (A.empty()) return monic(F, Q);
  Ring R = detail::univariate_ring(F, Q);
  Poly AN = to_poly(detail::compose_any(A, to_element(N_mod_Q, deg(Q)), R));
  return monic(F, poly_gcd(F, AN, Q));
}

FiberSplit phi_split(const UnivariateRep& u, Projection phi, Rng& rng, DescentTrace* trace) {
  const PrimeField& F = u.F;
  const std::size_t n = u.n(), m = phi.m;
  if (m < 1 || m > n) raise(Errc::InvalidArgument, "projection must keep 1..n coordinates");
  FiberSplit out;
  out.mu = u.mu;
  if (u.empty()) return out;
  const std::size_t delta = u.degree();
  if (F.p() <= static_cast<u64>(delta) * delta)
    raise(Errc::CharacteristicTooSmall, "need p > delta^2");
  Ring R = detail::univariate_ring(F, u.P);

  // Step 1: nu separating for pi_m(V), checked by inverse composition.
  Poly N, chi;
  bool found = false;
  for (std::size_t attempt = 1; attempt <= rng.max_retries() && !found; ++attempt) {
    std::vector<u64> nu = random_form(F, m, delta, rng);
    N = poly_rem(F, detail::linear_combination(F, nu, u.U), u.P);
    ResidueElement Ne = to_element(N, delta);
    chi = char_poly(Ne, R);
    found = true;
    for (std::size_t i = 0; i < m && found; ++i)
      found = detail::recover(R, Ne, chi, to_element(u.U[i], delta)).has_value();
    if (found) rng.record(attempt, false);
  }
  if (!found) {
    rng.record(rng.max_retries(), true);
    raise(Errc::RetryBudgetExhausted, "no form separates the projection");
  }

  // Step 2: chi_N = prod C_k^r_k.
  auto factors = squarefree_decomposition(F, chi);
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (std::size_t k = 1; k < factors.size(); ++k)
    if (factors[k - 1].second >= factors[k].second)
      raise(Errc::InvalidArgument, "squarefree decomposition has repeated multiplicities");

  // Step 3: top-down gcds along the subproduct tree of the C_k.
  std::vector<Poly> leaves;
  for (const auto& f : factors) leaves.push_back(monic(F, f.first));
  SubproductTree tree = build_subproduct_tree(F, leaves);
  if (trace) {
    *trace = DescentTrace{};
    trace->factors = factors;
    trace->N = N;
  }
  std::vector<Poly> g{u.P}, NN{N};
  for (std::size_t j = 0; j < tree.levels.size(); ++j) {
    if (j > 0) {
      std::vector<Poly> g2(tree.levels[j].size()), N2(tree.levels[j].size());
      for (std::size_t i = 0; i < g2.size(); ++i) {
        const Poly& parent = g[i / 2];
        if (deg(parent) <= 0 || deg(tree.levels[j][i]) <= 0) {
          g2[i] = Poly{1};  // pruned subtree or dummy leaf
          continue;
        }
        g2[i] = gamma(tree.levels[j][i], parent, NN[i / 2], F);
        N2[i] = poly_rem(F, NN[i / 2], g2[i]);
      }
      g = std::move(g2);
      NN = std::move(N2);
    }
    if (trace) {
      std::size_t sk = 0, sg = 0;
      for (const auto& K : tree.levels[j]) sk += static_cast<std::size_t>(std::max(deg(K), 0));
      for (const auto& x : g) sg += static_cast<std::size_t>(std::max(deg(x), 0));
      trace->sum_deg_K.push_back(sk);
      trace->sum_deg_gamma.push_back(sg);
    }
  }
  if (trace) trace->leaves.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(leaves.size()));

  // Step 4: reduce the coordinates.
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    const Poly& Pk = g[k];
    if (deg(Pk) <= 0) continue;
    FiberPart part;
    part.r = static_cast<std::size_t>(factors[k].second);
    part.u.F = F;
    part.u.vars = u.vars;
    part.u.P = Pk;
    part.u.mu = u.mu;
    for (const auto& c : u.U) part.u.U.push_back(poly_rem(F, c, Pk));
    out.parts.push_back(std::move(part));
  }
  return out;
}

std::vector<UnivariateRep> equi_split(const UnivariateRep& u, const std::vector<std::size_t>& order,
                                      Rng& rng) {
  const std::size_t n = u.n();
  if (u.empty()) return {};
  std::vector<std::size_t> inv(n);
  for (std::size_t k = 0; k < n; ++k) inv.at(order.at(k)) = k;
  std::vector<UnivariateRep> cur{permute_urep(u, order)};
  for (std::size_t i = n - 1; i >= 1; --i) {
    std::vector<UnivariateRep> next;
    for (const auto& v : cur)
      for (auto& part : phi_split(v, {i}, rng).parts) next.push_back(std::move(part.u));
    cur = std::move(next);
  }
  for (auto& v : cur) v = permute_urep(v, inv);
  return cur;
}

namespace {

bool component_less(const TriangularSet& a, const TriangularSet& b) {
  if (a.delta() != b.delta()) return a.delta() < b.delta();
  return a.polys < b.polys;
}

}  // namespace

Decomposition decompose_to_trisets(const UnivariateRep& u, const std::vector<std::size_t>& order,
                                   Rng& rng) {
  check_urep(u);
  if (order.size() != u.n()) raise(Errc::LengthMismatch, "order has the wrong arity");
  Decomposition d;
  d.order = order;
  d.source = u;
  std::vector<UnivariateRep> parts = equi_split(u, order, rng);
  std::vector<UrepConversion> conv;
  for (const auto& v : parts) conv.push_back(triset_from_urep(v, order, rng));
  std::vector<std::size_t> idx(conv.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return component_less(conv[a].triset, conv[b].triset);
  });
  for (auto k : idx) {
    d.components.push_back(conv[k].triset);
    d.receipts.push_back(conv[k].receipt);
    d.moduli.push_back(parts[k].P);
  }
  return d;
}

namespace {

void require_source(const UnivariateRep& u, const Decomposition& d) {
  if (!(d.source == u)) raise(Errc::StaleConversionData, "decomposition belongs to another set");
}

}  // namespace

std::vector<ResidueElement> split_element(const Poly& a, const UnivariateRep& u,
                                          const Decomposition& d) {
  require_source(u, d);
  std::vector<ResidueElement> out;
  if (d.moduli.empty()) return out;
  std::vector<Poly> res = multi_reduce(u.F, poly_rem(u.F, a, u.P), d.moduli);
  for (std::size_t k = 0; k < res.size(); ++k) out.push_back(d.receipts[k].pull(res[k]));
  return out;
}

Poly combine_elements(const std::vector<ResidueElement>& parts, const UnivariateRep& u,
                      const Decomposition& d) {
  require_source(u, d);
  if (parts.size() != d.components.size()) raise(Errc::LengthMismatch, "one element per component");
  if (parts.empty()) return {};
  std::vector<Poly> res;
  for (std::size_t k = 0; k < parts.size(); ++k) res.push_back(d.receipts[k].push(parts[k]));
  return crt_combine(u.F, res, d.moduli);
}

}  // namespace trideco
