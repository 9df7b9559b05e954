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

// Text format for triangular sets:
//
//   prime: 13
//   vars: X1 < X2
//   poly 1: X1 + 12
//   poly 2: X2^2 + 10*X2 + 2
//   ---
//   poly 1: ...
//
// Besides chains a file may carry operand lines (`F:`, `G:`, `G1:`, `G2:`,
// `ell:`, `f:`) anywhere after the header, and per-chain lines `tag:` and
// `inverse:`. `#` starts a comment line.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trideco/triset.hpp"

namespace trideco {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Chain {
  TriangularSet T;
  std::string tag;                         // empty when absent
  std::optional<std::string> inverse;      // raw expression text
};

struct TriSetDoc {
  PrimeField F{2};
  std::vector<std::string> vars;
  std::vector<Chain> chains;
  std::map<std::string, std::string> operands;  // F, G, G1, G2, ell, f
};

TriSetDoc parse_trisetfile(const std::string& text);
std::string print_trisetfile(const TriSetDoc& doc);

/// Sparse polynomial over `vars`; unknown names are parse errors.
RawPoly parse_expr(const std::string& text, const std::vector<std::string>& vars,
                   const PrimeField& F, std::size_t line = 0);

/// Dense tensor (first variable fastest, extents `shape`) as an expression,
/// terms from the largest monomial down, coefficients in [0, p).
std::string print_dense(const std::vector<u64>& a, const std::vector<std::size_t>& shape,
                        const std::vector<std::string>& vars);

/// Element of R_T as an expression in T's variables.
std::string print_element(const ResidueElement& a, const TriangularSet& T);

/// Comma-separated list of field elements.
std::string print_values(const std::vector<u64>& v);
std::vector<u64> parse_values(const std::string& text, const PrimeField& F, std::size_t line = 0);

/// "v1,v2,..." to indices into vars. Throws ParseError.
std::vector<std::size_t> parse_order(const std::string& csv, const std::vector<std::string>& vars);

}  // namespace trideco
