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

#include "trideco/solve.hpp"

#include "trideco/error.hpp"

namespace trideco {
namespace {

// Balanced by count: the first ceil(l/2) inputs, then the rest.
UnivariateRep union_of(const std::vector<UnivariateRep>& u, std::size_t lo, std::size_t hi,
                       Rng& rng) {
  if (hi - lo == 1) return u[lo];
  std::size_t mid = lo + (hi - lo + 1) / 2;
  UnivariateRep a = union_of(u, lo, mid, rng);
  UnivariateRep b = union_of(u, mid, hi, rng);
  return merge_union(a, b, rng);
}

UnivariateRep reduce_to(const UnivariateRep& u, const Poly& P) {
  UnivariateRep r = u;
  r.P = P;
  for (auto& c : r.U) c = deg(P) > 0 ? poly_rem(u.F, c, P) : Poly{};
  return r;
}

}  // namespace

Decomposition solve_p1(const P1Problem& pb, Rng& rng) {
  if (pb.plus.empty() && pb.minus.empty())
    raise(Errc::InvalidArgument, "no input triangular sets");
  const TriangularSet& ref = pb.plus.empty() ? pb.minus[0] : pb.plus[0];
  const PrimeField& F = ref.F;
  std::size_t delta = 0;
  for (const auto* fam : {&pb.plus, &pb.minus})
    for (const auto& T : *fam) {
      if (!(T.F == F) || T.vars != ref.vars)
        raise(Errc::InvalidArgument, "inputs use different fields or variables");
      delta += T.delta();
    }
  if (pb.target_order.size() != ref.n()) raise(Errc::LengthMismatch, "order has the wrong arity");
  if (F.p() <= static_cast<u64>(delta) * delta)
    raise(Errc::CharacteristicTooSmall, "need p > (sum of degrees)^2");

  auto family = [&](const std::vector<TriangularSet>& Ts) {
    if (Ts.empty()) return empty_urep(F, ref.vars);
    std::vector<UnivariateRep> us;
    for (const auto& T : Ts) us.push_back(urep_from_triset(T, rng).urep);
    return union_of(us, 0, us.size(), rng);
  };
  UnivariateRep plus = family(pb.plus), minus = family(pb.minus);
  UnivariateRep v = merge_difference(plus, minus, rng);
  return decompose_to_trisets(v, pb.target_order, rng);
}

P2Answer solve_p2(const TriangularSet& T, const ResidueElement& Fa,
                  const std::vector<std::size_t>& target_order, Rng& rng) {
  if (Fa.size() != T.delta()) raise(Errc::LengthMismatch, "F has the wrong length");
  const PrimeField& F = T.F;
  if (F.p() <= static_cast<u64>(T.delta()) * T.delta())
    raise(Errc::CharacteristicTooSmall, "need p > delta^2");
  TrisetConversion c = urep_from_triset(T, rng);
  const UnivariateRep& u = c.urep;
  Poly Fs = c.receipt.push(Fa);
  Poly P1 = monic(F, poly_gcd(F, u.P, Fs));
  Poly P2 = poly_quo(F, u.P, P1);
  UnivariateRep zero = reduce_to(u, P1), off = reduce_to(u, P2);

  P2Answer ans;
  ans.on_zero = decompose_to_trisets(zero, target_order, rng);
  ans.off_zero = decompose_to_trisets(off, target_order, rng);
  if (!off.empty()) {
    Poly G = deg(P2) > 0 ? invmod(F, poly_rem(F, Fs, P2), P2) : Poly{};
    ans.inverses = split_element(G, off, ans.off_zero);
  }
  return ans;
}

}  // namespace trideco
