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

// Brute-force references over completely split point sets. Nothing here is
// fast; everything here is simple.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "trideco/kernels.hpp"
#include "trideco/urep.hpp"

namespace trideco {

using Point = std::vector<u64>;

/// Distinct F_p-rational points; coordinate j belongs to vars[j].
struct PointSet {
  PrimeField F{2};
  std::vector<std::string> vars;
  std::vector<Point> points;

  std::size_t n() const { return vars.size(); }
  std::size_t size() const { return points.size(); }
};

/// Coordinate indices from smallest to largest variable.
using Order = std::vector<std::size_t>;

Order identity_order(std::size_t n);

/// Roots of a monic polynomial that splits with distinct roots, sorted.
/// Throws NotSplit otherwise.
std::vector<u64> split_roots(const PrimeField& F, const Poly& f);

/// All points of V(T), in T's coordinates, sorted. Throws NotSplit.
PointSet enumerate_points(const TriangularSet& T);

/// Whether every pi_i fiber over pi_{i-1}(S) has the same size, for the
/// coordinates taken in `order`.
bool is_equiprojectable(const PointSet& S, const Order& order);

/// The triangular set of S for `order`; its variables are the permuted
/// names. Throws NotEquiprojectable.
TriangularSet interpolate_triset(const PointSet& S, const Order& order);

/// Element of R_T taking value values[k] at points[k], where the points
/// are exactly V(T) (any order).
ResidueElement interpolate_element(const TriangularSet& T, const std::vector<Point>& points,
                                   const std::vector<u64>& values);

/// Partition by iterated fiber-cardinality refinement for i = n-1 .. 1.
/// Parts are sorted by (size, sorted point list).
std::vector<PointSet> naive_equi_decompose(const PointSet& S, const Order& order);

ResidueElement naive_modcomp(const std::vector<u64>& Fc, const DegreeBounds& bounds,
                             const std::vector<ResidueElement>& G, const TriangularSet& T);
std::vector<u64> naive_powproj(const LinearForm& l, const std::vector<ResidueElement>& G,
                               const DegreeBounds& bounds, const TriangularSet& T);
LinearForm naive_trace(const TriangularSet& T);
Poly naive_char_poly(const ResidueElement& A, const TriangularSet& T);

/// Points in the order given by `order`: out[k] = x[order[k]].
Point permute_point(const Point& x, const Order& order);
PointSet permute(const PointSet& S, const Order& order);

/// k distinct uniform points of F_p^n.
PointSet random_points(const PrimeField& F, std::size_t n, std::size_t k, std::mt19937_64& g);

/// Random equiprojectable set with multidegree d (distinct values per fiber).
PointSet random_equiprojectable(const PrimeField& F, const std::vector<std::size_t>& d,
                                std::mt19937_64& g);

/// Random split radical family: sample k points, decompose, interpolate.
std::vector<TriangularSet> random_split_family(const PrimeField& F, std::size_t n,
                                               std::size_t k, std::mt19937_64& g);

/// (P, U, mu) of S by interpolation. Throws NotSeparating when mu collides.
UnivariateRep urep_of_points(const PointSet& S, const std::vector<u64>& mu);

/// Points of V(u), sorted. Throws NotSplit.
PointSet urep_points(const UnivariateRep& u);

}  // namespace trideco
