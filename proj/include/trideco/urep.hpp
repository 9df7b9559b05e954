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

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trideco/kernels.hpp"
#include "trideco/rng.hpp"

namespace trideco {

/// (P, U, mu): V = { (U_1(z), ..., U_n(z)) : P(z) = 0 } with z = sum mu_i x_i.
/// The empty set is P = 1 with zero coordinates.
struct UnivariateRep {
  PrimeField F{2};
  std::vector<std::string> vars;
  Poly P{1};
  std::vector<Poly> U;
  std::vector<u64> mu;

  std::size_t n() const { return vars.size(); }
  std::size_t degree() const { return static_cast<std::size_t>(deg(P)); }
  bool empty() const { return deg(P) == 0; }
  bool operator==(const UnivariateRep& o) const {
    return F == o.F && vars == o.vars && P == o.P && U == o.U && mu == o.mu;
  }
};

/// The empty set over the given variables.
UnivariateRep empty_urep(const PrimeField& F, std::vector<std::string> vars);

/// Throws InvalidArgument unless P is monic squarefree, deg U_i < deg P and
/// sum mu_i U_i = X mod P.
void check_urep(const UnivariateRep& u);

/// Representation of the same set for the form nu. Throws NotSeparating.
UnivariateRep change_separating(const UnivariateRep& u, const std::vector<u64>& nu);

UnivariateRep merge_union(const UnivariateRep& u, const UnivariateRep& v, Rng& rng);
UnivariateRep merge_difference(const UnivariateRep& u, const UnivariateRep& v, Rng& rng);

/// Coordinates reordered: out.vars[k] = u.vars[order[k]].
UnivariateRep permute_urep(const UnivariateRep& u, const std::vector<std::size_t>& order);

/// Data kept by a conversion so that elements can be moved across the
/// isomorphism R_T = K[X]/<P> later. Opaque to callers.
class ConversionReceipt {
 public:
  struct Level;
  ConversionReceipt();
  ~ConversionReceipt();
  ConversionReceipt(const ConversionReceipt&);
  ConversionReceipt& operator=(const ConversionReceipt&);

  const TriangularSet& triset() const { return T_; }
  const UnivariateRep& urep() const { return u_; }

  /// R_T -> K[X]/<P>.
  Poly push(const ResidueElement& a) const;
  /// K[X]/<P> -> R_T.
  ResidueElement pull(const Poly& a) const;

 private:
  friend struct ConversionBuilder;
  TriangularSet T_;
  UnivariateRep u_;
  std::vector<std::shared_ptr<const Level>> levels_;
};

struct TrisetConversion {
  UnivariateRep urep;
  ConversionReceipt receipt;
};

struct UrepConversion {
  TriangularSet triset;
  ConversionReceipt receipt;
};

/// Throws RadicalitySuspect, and CharacteristicTooSmall when p <= delta_T.
TrisetConversion urep_from_triset(const TriangularSet& T, Rng& rng);

/// T of V(u) for the variable order `order` (indices into u.vars, smallest
/// first). Throws NotEquiprojectable, RetryBudgetExhausted, and
/// CharacteristicTooSmall when p <= deg P.
UrepConversion triset_from_urep(const UnivariateRep& u, const std::vector<std::size_t>& order,
                                Rng& rng);

/// Throw StaleConversionData unless (T, u) is the pair the receipt was made for.
Poly push_element(const ResidueElement& a, const TriangularSet& T, const UnivariateRep& u,
                  const ConversionReceipt& r);
ResidueElement pull_element(const Poly& a, const UnivariateRep& u, const TriangularSet& T,
                            const ConversionReceipt& r);

}  // namespace trideco
