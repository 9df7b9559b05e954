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

#include <cstddef>

#include "trideco/field.hpp"
#include "trideco/poly.hpp"

namespace trideco::detail {

/// Full product of two nonzero coefficient arrays through NTT. Uses a
/// direct transform when p < 2^30 supports the length, otherwise several
/// fixed primes and Garner reconstruction.
Poly ntt_multiply(const PrimeField& F, const u64* a, std::size_t na,
                  const u64* b, std::size_t nb);

/// True if the direct transform will be used for this product length.
bool ntt_direct(const PrimeField& F, std::size_t len);

}  // namespace trideco::detail
