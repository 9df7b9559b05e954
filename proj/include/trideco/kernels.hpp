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
#include <vector>

#include "trideco/triset.hpp"

namespace trideco {

/// Degree bounds f = (f1, ..., fm), m in {1, 2}.
struct DegreeBounds {
  std::vector<std::size_t> f;
  std::size_t delta_f() const {
    std::size_t r = 1;
    for (auto x : f) r *= x;
    return r;
  }
};

/// Operation counts of one composition or projection call.
struct KernelStats {
  std::size_t ring_muls = 0;        // forward products in R_T
  std::size_t transposed_muls = 0;  // transposed products
  std::size_t eps[2] = {1, 1};      // giant-step counts
  std::size_t eps_prime[2] = {1, 1};  // baby-step counts
};

/// R_T for n in {1, 2} with the precomputation every fast kernel shares.
/// Immutable after construction, so one instance may serve many threads.
class Ring {
 public:
  /// Throws UnsupportedArity when n > 2.
  explicit Ring(TriangularSet T);
  ~Ring();
  Ring(Ring&&) noexcept;
  Ring& operator=(Ring&&) noexcept;

  const TriangularSet& triset() const { return T_; }
  const PrimeField& field() const { return T_.F; }
  std::size_t n() const { return T_.n(); }
  std::size_t delta() const { return T_.delta(); }

  ResidueElement one() const { return one_element(T_); }
  ResidueElement mul(const ResidueElement& a, const ResidueElement& b) const;
  LinearForm transposed_mul(const ResidueElement& a, const LinearForm& l) const;
  /// tr(m) for every basis monomial m.
  const LinearForm& trace() const;

 private:
  struct Impl;
  TriangularSet T_;
  std::unique_ptr<Impl> impl_;
};

ResidueElement ring_mul(const ResidueElement& a, const ResidueElement& b,
                        const TriangularSet& T);
LinearForm transposed_mul(const ResidueElement& a, const LinearForm& l,
                          const TriangularSet& T);

/// F is a dense tensor over Y1..Ym (Y1 fastest) with extents bounds.f.
/// BoundsExceedRingDegree when m = 2 and delta_f > delta_T; univariate
/// bounds are unrestricted.
ResidueElement mod_compose(const std::vector<u64>& F, const DegreeBounds& bounds,
                           const std::vector<ResidueElement>& G, const Ring& R,
                           KernelStats* stats = nullptr);
ResidueElement mod_compose(const std::vector<u64>& F, const DegreeBounds& bounds,
                           const std::vector<ResidueElement>& G, const TriangularSet& T);

/// Entry c1 + f1 * c2 is l(G1^c1 G2^c2).
std::vector<u64> power_project(const LinearForm& l, const std::vector<ResidueElement>& G,
                               const DegreeBounds& bounds, const Ring& R,
                               KernelStats* stats = nullptr);
std::vector<u64> power_project(const LinearForm& l, const std::vector<ResidueElement>& G,
                               const DegreeBounds& bounds, const TriangularSet& T);

LinearForm trace_form(const TriangularSet& T);

Poly char_poly(const ResidueElement& A, const Ring& R);
Poly char_poly(const ResidueElement& A, const TriangularSet& T);

struct InverseComposition {
  Poly U;
  bool verified = false;
};

/// U with B = U(A). Throws NotSeparating when chi_A is not squarefree and
/// NotInSubalgebra when the verifying composition disagrees with B.
InverseComposition inverse_mod_compose(const ResidueElement& A, const ResidueElement& B,
                                       const Ring& R);
InverseComposition inverse_mod_compose(const ResidueElement& A, const ResidueElement& B,
                                       const TriangularSet& T);

ResidueElement invert_element(const ResidueElement& A, const Ring& R);
ResidueElement invert_element(const ResidueElement& A, const TriangularSet& T);

namespace detail {

/// F(G) mod T for a univariate F of any degree (chunks of delta terms).
ResidueElement compose_any(const Poly& F, const ResidueElement& G, const Ring& R);

/// Inverse composition that tolerates a non-squarefree chi_A. With rad the
/// squarefree part of chi, returns U of degree < deg rad such that B = U(A)
/// whenever B is a polynomial in A. No verification is done. chi may be
/// passed in when already known.
Poly generalized_inverse(const ResidueElement& A, const ResidueElement& B, const Ring& R,
                         const Poly& chi);

/// Trace form of R_T for any n, one level at a time with tower_mul.
LinearForm tower_trace_form(const TriangularSet& T);

/// Row-major (rows x inner) times (inner x cols) over F_p.
std::vector<u64> matmul(const PrimeField& F, const std::vector<u64>& a,
                        const std::vector<u64>& b, std::size_t rows,
                        std::size_t inner, std::size_t cols);

}  // namespace detail
}  // namespace trideco
