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

#include "trideco/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "trideco/error.hpp"

namespace trideco {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Recursive-descent over: expr := [sign] term (sign term)*,
// term := factor ('*' factor)*, factor := number | name ['^' number].
class ExprParser {
 public:
  ExprParser(const std::string& s, const std::vector<std::string>& vars, const PrimeField& F,
             std::size_t line)
      : s_(s), vars_(vars), F_(F), line_(line) {}

  RawPoly parse() {
    RawPoly out;
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    for (;;) {
      RawPoly::Term t = term();
      if (neg) t.c = F_.neg(t.c);
      out.terms.push_back(std::move(t));
      skip();
      if (pos_ == s_.size()) break;
      char c = get();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      neg = c == '-';
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    char c = peek();
    ++pos_;
    return c;
  }
  u64 number() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    u64 v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = F_.add(F_.mul(v, F_.reduce(10)), F_.reduce(static_cast<u64>(s_[pos_++] - '0')));
    return v;
  }
  u32 exponent() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an exponent");
    u64 v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<u64>(s_[pos_++] - '0');
      if (v > 1000000) fail("exponent too large");
    }
    return static_cast<u32>(v);
  }
  RawPoly::Term term() {
    RawPoly::Term t{std::vector<u32>(vars_.size(), 0), 1};
    for (;;) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.c = F_.mul(t.c, number());
      } else if (is_ident_start(c)) {
        std::size_t a = pos_;
        while (pos_ < s_.size() && is_ident(s_[pos_])) ++pos_;
        std::string name = s_.substr(a, pos_ - a);
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
          pos_ = a;
          fail("unknown variable '" + name + "'");
        }
        u32 e = 1;
        if (peek() == '^') {
          get();
          e = exponent();
        }
        t.exps[static_cast<std::size_t>(it - vars_.begin())] += e;
      } else {
        fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of expression");
      }
      if (peek() != '*') break;
      get();
    }
    return t;
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  const PrimeField& F_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Chain polynomial i (0-based) from its expression: monic in vars[i],
// reduced in the earlier variables.
std::vector<u64> chain_poly(const RawPoly& r, std::size_t i, const std::vector<std::size_t>& d,
                            const PrimeField& F, std::size_t line) {
  std::size_t block = 1;
  for (std::size_t j = 0; j < i; ++j) block *= d[j];
  std::vector<u64> out((d[i] + 1) * block, 0);
  for (const auto& t : r.terms) {
    for (std::size_t j = i + 1; j < t.exps.size(); ++j)
      if (t.exps[j]) throw ParseError(line, "poly " + std::to_string(i + 1) + " uses a later variable");
    std::size_t idx = 0, stride = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (t.exps[j] >= d[j]) throw ParseError(line, "poly " + std::to_string(i + 1) + " is not reduced");
      idx += t.exps[j] * stride;
      stride *= d[j];
    }
    idx += t.exps[i] * stride;
    out[idx] = F.add(out[idx], t.c);
  }
  for (std::size_t k = 0; k < block; ++k)
    if (out[d[i] * block + k] != (k == 0 ? 1u : 0u))
      throw ParseError(line, "poly " + std::to_string(i + 1) + " is not monic");
  return out;
}

std::size_t degree_in(const RawPoly& r, std::size_t i) {
  std::size_t e = 0;
  for (const auto& t : r.terms)
    if (t.c && t.exps[i] > e) e = t.exps[i];
  return e;
}

const std::set<std::string> kDocOperands{"F", "G", "G1", "G2", "ell", "f"};

}  // namespace

RawPoly parse_expr(const std::string& text, const std::vector<std::string>& vars,
                   const PrimeField& F, std::size_t line) {
  return ExprParser(text, vars, F, line).parse();
}

TriSetDoc parse_trisetfile(const std::string& text) {
  TriSetDoc doc;
  bool have_prime = false, have_vars = false;
  struct Pending {
    std::vector<std::pair<RawPoly, std::size_t>> polys;  // with line numbers
    std::string tag;
    std::optional<std::string> inverse;
    std::size_t first_line = 0;
  };
  std::vector<Pending> pend(1);
  std::istringstream in(text);
  std::string raw;
  std::size_t ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "---") {
      pend.emplace_back();
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(ln, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
    if (key == "prime") {
      if (have_prime) throw ParseError(ln, "duplicate prime");
      if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(ln, "prime must be a decimal integer");
      try {
        doc.F = PrimeField(std::stoull(val));
      } catch (const std::exception& e) {
        throw ParseError(ln, std::string("bad prime: ") + e.what());
      }
      have_prime = true;
      continue;
    }
    if (key == "vars") {
      if (have_vars) throw ParseError(ln, "duplicate vars");
      std::string rest = val;
      std::size_t a = 0;
      for (;;) {
        std::size_t b = rest.find('<', a);
        std::string name = trim(rest.substr(a, b == std::string::npos ? std::string::npos : b - a));
        if (name.empty() || !is_ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), is_ident))
          throw ParseError(ln, "bad variable name '" + name + "'");
        if (std::find(doc.vars.begin(), doc.vars.end(), name) != doc.vars.end())
          throw ParseError(ln, "repeated variable '" + name + "'");
        doc.vars.push_back(name);
        if (b == std::string::npos) break;
        a = b + 1;
      }
      have_vars = true;
      continue;
    }
    if (!have_prime || !have_vars) throw ParseError(ln, "prime and vars must come first");
    if (key.rfind("poly", 0) == 0) {
      std::string idx = trim(key.substr(4));
      if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(ln, "expected 'poly <i>'");
      std::size_t i = std::stoul(idx);
      Pending& p = pend.back();
      if (i != p.polys.size() + 1) throw ParseError(ln, "expected poly " + std::to_string(p.polys.size() + 1));
      if (i > doc.vars.size()) throw ParseError(ln, "more polynomials than variables");
      if (p.polys.empty()) p.first_line = ln;
      p.polys.emplace_back(parse_expr(val, doc.vars, doc.F, ln), ln);
    } else if (key == "tag") {
      pend.back().tag = val;
    } else if (key == "inverse") {
      parse_expr(val, doc.vars, doc.F, ln);
      pend.back().inverse = val;
    } else if (kDocOperands.count(key)) {
      if (doc.operands.count(key)) throw ParseError(ln, "duplicate operand " + key);
      doc.operands[key] = val;
    } else {
      throw ParseError(ln, "unknown key '" + key + "'");
    }
  }
  if (!have_prime || !have_vars) throw ParseError(ln, "missing prime or vars header");
  const std::size_t n = doc.vars.size();
  for (std::size_t c = 0; c < pend.size(); ++c) {
    Pending& p = pend[c];
    if (p.polys.empty()) {
      if (!p.tag.empty() || p.inverse || (c > 0 && c + 1 < pend.size()))
        throw ParseError(p.first_line ? p.first_line : ln, "empty chain");
      continue;
    }
    if (p.polys.size() != n)
      throw ParseError(p.first_line, "chain has " + std::to_string(p.polys.size()) +
                                         " polynomials, expected " + std::to_string(n));
    std::vector<std::size_t> d(n);
    std::vector<std::vector<u64>> polys(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = degree_in(p.polys[i].first, i);
      if (d[i] == 0) throw ParseError(p.polys[i].second, "poly " + std::to_string(i + 1) + " is constant in its variable");
      polys[i] = chain_poly(p.polys[i].first, i, d, doc.F, p.polys[i].second);
    }
    Chain ch;
    ch.T.F = doc.F;
    ch.T.vars = doc.vars;
    ch.T.d = d;
    ch.T.polys = std::move(polys);
    ch.tag = p.tag;
    ch.inverse = p.inverse;
    doc.chains.push_back(std::move(ch));
  }
  return doc;
}

std::string print_dense(const std::vector<u64>& a, const std::vector<std::size_t>& shape,
                        const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t idx = a.size(); idx-- > 0;) {
    if (!a[idx]) continue;
    std::string mono;
    std::size_t r = idx;
    std::vector<std::size_t> e(shape.size());
    for (std::size_t j = 0; j < shape.size(); ++j) {
      e[j] = r % shape[j];
      r /= shape[j];
    }
    for (std::size_t j = shape.size(); j-- > 0;) {
      if (!e[j]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[j];
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    std::string term = mono.empty() ? std::to_string(a[idx])
                       : a[idx] == 1 ? mono
                                     : std::to_string(a[idx]) + "*" + mono;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string print_element(const ResidueElement& a, const TriangularSet& T) {
  return print_dense(a, T.d, T.vars);
}

std::string print_values(const std::vector<u64>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

std::vector<u64> parse_values(const std::string& text, const PrimeField& F, std::size_t line) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    bool neg = !item.empty() && item[0] == '-';
    if (neg) item = trim(item.substr(1));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(line, "expected a comma-separated list of integers");
    u64 v = 0;
    for (char c : item) v = F.add(F.mul(v, F.reduce(10)), F.reduce(static_cast<u64>(c - '0')));
    out.push_back(neg ? F.neg(v) : v);
  }
  return out;
}

std::vector<std::size_t> parse_order(const std::string& csv, const std::vector<std::string>& vars) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    auto it = std::find(vars.begin(), vars.end(), item);
    if (it == vars.end()) throw ParseError(0, "unknown variable '" + item + "' in order");
    out.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  std::vector<std::size_t> s = out;
  std::sort(s.begin(), s.end());
  if (s.size() != vars.size() || std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ParseError(0, "order must list every variable exactly once");
  return out;
}

std::string print_trisetfile(const TriSetDoc& doc) {
  std::string out = "prime: " + std::to_string(doc.F.p()) + "\nvars: ";
  for (std::size_t i = 0; i < doc.vars.size(); ++i) out += (i ? " < " : "") + doc.vars[i];
  out += "\n";
  for (const char* k : {"F", "G", "G1", "G2", "ell", "f"}) {
    auto it = doc.operands.find(k);
    if (it != doc.operands.end()) out += std::string(k) + ": " + it->second + "\n";
  }
  for (std::size_t c = 0; c < doc.chains.size(); ++c) {
    const Chain& ch = doc.chains[c];
    if (c) out += "---\n";
    for (std::size_t i = 0; i < ch.T.n(); ++i) {
      std::vector<std::size_t> shape(ch.T.d.begin(), ch.T.d.begin() + static_cast<std::ptrdiff_t>(i));
      shape.push_back(ch.T.d[i] + 1);
      out += "poly " + std::to_string(i + 1) + ": " + print_dense(ch.T.polys[i], shape, doc.vars) + "\n";
    }
    if (!ch.tag.empty()) out += "tag: " + ch.tag + "\n";
    if (ch.inverse) out += "inverse: " + *ch.inverse + "\n";
  }
  return out;
}

}  // namespace trideco
