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

#include "trideco/verbs.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "trideco/duality.hpp"
#include "trideco/error.hpp"
#include "trideco/oracle.hpp"

namespace trideco {
namespace {

const Chain& single_chain(const TriSetDoc& in) {
  if (in.chains.size() != 1) raise(Errc::InvalidArgument, "expected exactly one chain");
  return in.chains[0];
}

const std::string& operand(const TriSetDoc& in, const std::string& key) {
  auto it = in.operands.find(key);
  if (it == in.operands.end()) throw ParseError(0, "missing operand '" + key + "'");
  return it->second;
}

std::vector<std::string> permuted(const std::vector<std::string>& v,
                                  const std::vector<std::size_t>& order) {
  std::vector<std::string> r;
  for (auto k : order) r.push_back(v[k]);
  return r;
}

TriSetDoc doc_of(const PrimeField& F, const std::vector<std::string>& vars,
                 const std::vector<TriangularSet>& Ts, const std::string& tag = "") {
  TriSetDoc out;
  out.F = F;
  out.vars = vars;
  for (const auto& T : Ts) out.chains.push_back({T, tag, std::nullopt});
  return out;
}

TriSetDoc run_p1(const TriSetDoc& in, const std::vector<std::size_t>& order, Rng& rng) {
  P1Problem pb;
  pb.target_order = order;
  for (const auto& ch : in.chains) {
    if (ch.tag.empty() || ch.tag == "plus") {
      pb.plus.push_back(ch.T);
    } else if (ch.tag == "minus") {
      pb.minus.push_back(ch.T);
    } else {
      throw ParseError(0, "unknown chain tag '" + ch.tag + "'");
    }
  }
  if (pb.plus.empty() && pb.minus.empty()) return doc_of(in.F, permuted(in.vars, order), {});
  Decomposition d = solve_p1(pb, rng);
  return doc_of(in.F, permuted(in.vars, order), d.components);
}

// (G list, m) from operands G or G1, G2, reduced mod T.
std::vector<ResidueElement> images(const TriSetDoc& in, const TriangularSet& T) {
  std::vector<ResidueElement> G;
  if (in.operands.count("G")) {
    G.push_back(reduce(parse_expr(in.operands.at("G"), T.vars, T.F), T));
  } else {
    G.push_back(reduce(parse_expr(operand(in, "G1"), T.vars, T.F), T));
    G.push_back(reduce(parse_expr(operand(in, "G2"), T.vars, T.F), T));
  }
  return G;
}

std::vector<std::size_t> bounds_operand(const TriSetDoc& in) {
  std::vector<std::size_t> f;
  for (u64 x : parse_values(operand(in, "f"), PrimeField(in.F.p()))) f.push_back(x);
  return f;
}

}  // namespace

TriSetDoc verb_decompose(const TriSetDoc& in, const std::optional<std::string>& order, Rng& rng) {
  std::vector<std::size_t> ord = identity_order(in.vars.size());
  if (order) ord = parse_order(*order, in.vars);
  return run_p1(in, ord, rng);
}

TriSetDoc verb_change_order(const TriSetDoc& in, const std::optional<std::string>& source,
                            const std::string& target, Rng& rng) {
  if (source && parse_order(*source, in.vars) != identity_order(in.vars.size()))
    throw ParseError(0, "source order does not match the file's variable order");
  return run_p1(in, parse_order(target, in.vars), rng);
}

TriSetDoc verb_quasi_inverse(const TriSetDoc& in, const std::optional<std::string>& target,
                             Rng& rng) {
  const TriangularSet& T = single_chain(in).T;
  std::vector<std::size_t> ord = identity_order(in.vars.size());
  if (target) ord = parse_order(*target, in.vars);
  ResidueElement f = reduce(parse_expr(operand(in, "F"), T.vars, T.F), T);
  P2Answer a = solve_p2(T, f, ord, rng);
  TriSetDoc out = doc_of(in.F, permuted(in.vars, ord), a.on_zero.components, "zero");
  for (std::size_t k = 0; k < a.off_zero.components.size(); ++k) {
    const TriangularSet& C = a.off_zero.components[k];
    out.chains.push_back({C, "nonzero", print_element(a.inverses[k], C)});
  }
  return out;
}

std::string verb_modcomp(const TriSetDoc& in, Via via, Rng& rng) {
  const TriangularSet& T = single_chain(in).T;
  std::vector<ResidueElement> G = images(in, T);
  const std::size_t m = G.size();
  std::vector<std::string> yv = m == 1 ? std::vector<std::string>{"Y"}
                                       : std::vector<std::string>{"Y1", "Y2"};
  RawPoly Fr = parse_expr(operand(in, "F"), yv, T.F);
  std::vector<std::size_t> f(m, 1);
  for (const auto& t : Fr.terms)
    for (std::size_t j = 0; j < m; ++j) f[j] = std::max<std::size_t>(f[j], t.exps[j] + 1);
  if (in.operands.count("f")) {
    std::vector<std::size_t> g = bounds_operand(in);
    if (g.size() != m) throw ParseError(0, "f needs one bound per image");
    for (std::size_t j = 0; j < m; ++j)
      if (g[j] < f[j]) raise(Errc::InvalidArgument, "F exceeds the degree bounds");
    f = g;
  }
  std::vector<u64> dense(m == 1 ? f[0] : f[0] * f[1], 0);
  for (const auto& t : Fr.terms) {
    std::size_t idx = t.exps[0] + (m == 2 ? f[0] * t.exps[1] : 0);
    dense[idx] = T.F.add(dense[idx], t.c);
  }
  ResidueElement K;
  if (via == Via::Kernel) {
    K = mod_compose(dense, {f}, G, T);
  } else {
    if (m != 1) raise(Errc::InvalidArgument, "the decomposition route composes one image only");
    Poly P = dense;
    normalize(P);
    K = modcomp_via_decomposition(P, G[0], T, rng);
  }
  return print_element(K, T);
}

std::string verb_powproj(const TriSetDoc& in, Via via, Rng& rng) {
  const TriangularSet& T = single_chain(in).T;
  std::vector<ResidueElement> G = images(in, T);
  const std::string& ls = operand(in, "ell");
  LinearForm l = ls == "trace" ? trace_form(T) : parse_values(ls, T.F);
  if (l.size() != T.delta()) raise(Errc::LengthMismatch, "ell needs one value per basis monomial");
  std::vector<std::size_t> f = bounds_operand(in);
  if (f.size() != G.size()) throw ParseError(0, "f needs one bound per image");
  std::vector<u64> v;
  if (via == Via::Kernel) {
    v = power_project(l, G, {f}, T);
  } else {
    if (G.size() != 1) raise(Errc::InvalidArgument, "the decomposition route projects one image only");
    if (f[0] > T.delta()) raise(Errc::BoundsExceedRingDegree, "f exceeds the ring degree");
    v = powproj_via_decomposition(l, G[0], T, f[0], rng);
  }
  return print_values(v);
}

std::vector<CheckResult> selfcheck(Rng& rng, std::size_t count) {
  const std::size_t half = std::max<std::size_t>(1, count / 2);
  std::vector<CheckResult> out;
  std::mt19937_64 g(rng.below(~0ull));
  PrimeField F{10007};
  auto run = [&](const std::string& name, auto&& body) {
    CheckResult r{name, true, ""};
    try {
      r.passed = body();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    out.push_back(r);
  };
  auto random_set = [&](std::vector<std::size_t> d) {
    return interpolate_triset(random_equiprojectable(F, d, g), identity_order(d.size()));
  };
  auto elem = [&](std::size_t n) {
    ResidueElement a(n);
    for (auto& x : a) x = g() % F.p();
    return a;
  };
  run("mod_compose", [&] {
    for (std::size_t it = 0; it < count; ++it) {
      TriangularSet T = random_set({1 + g() % 5, 1 + g() % 5});
      std::vector<u64> Fc = elem(T.delta());
      std::vector<ResidueElement> G{elem(T.delta())};
      if (mod_compose(Fc, {{Fc.size()}}, G, T) != naive_modcomp(Fc, {{Fc.size()}}, G, T))
        return false;
    }
    return true;
  });
  run("power_project", [&] {
    for (std::size_t it = 0; it < count; ++it) {
      TriangularSet T = random_set({1 + g() % 5, 1 + g() % 5});
      LinearForm l = elem(T.delta());
      std::vector<ResidueElement> G{elem(T.delta()), elem(T.delta())};
      std::size_t f1 = std::min<std::size_t>(2, T.delta());
      DegreeBounds b{{f1, T.delta() / f1}};
      if (power_project(l, G, b, T) != naive_powproj(l, G, b, T)) return false;
    }
    return true;
  });
  run("char_poly", [&] {
    for (std::size_t it = 0; it < count; ++it) {
      TriangularSet T = random_set({1 + g() % 5, 1 + g() % 5});
      ResidueElement a = elem(T.delta());
      if (char_poly(a, T) != naive_char_poly(a, T) || trace_form(T) != naive_trace(T)) return false;
    }
    return true;
  });
  run("conversion", [&] {
    for (std::size_t it = 0; it < count; ++it) {
      std::size_t n = 1 + it % 3;
      std::vector<std::size_t> d(n);
      for (auto& x : d) x = 1 + g() % 3;
      TriangularSet T = random_set(d);
      TrisetConversion c = urep_from_triset(T, rng);
      if (triset_from_urep(c.urep, identity_order(n), rng).triset != T) return false;
    }
    return true;
  });
  run("decomposition", [&] {
    for (std::size_t it = 0; it < count; ++it) {
      std::size_t n = 2 + it % 2;
      PointSet S = random_points(F, n, 1 + g() % 12, g);
      for (auto& x : S.points) x[0] %= 2;
      std::sort(S.points.begin(), S.points.end());
      S.points.erase(std::unique(S.points.begin(), S.points.end()), S.points.end());
      std::vector<TriangularSet> plus;
      for (const auto& part : naive_equi_decompose(S, identity_order(n)))
        plus.push_back(interpolate_triset(part, identity_order(n)));
      Order ord = identity_order(n);
      std::reverse(ord.begin(), ord.end());
      std::vector<TriangularSet> want;
      for (const auto& part : naive_equi_decompose(S, ord)) want.push_back(interpolate_triset(part, ord));
      std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
        return a.delta() != b.delta() ? a.delta() < b.delta() : a.polys < b.polys;
      });
      if (solve_p1({plus, {}, ord}, rng).components != want) return false;
    }
    return true;
  });
  run("quasi_inverse", [&] {
    for (std::size_t it = 0; it < count; ++it) {
      TriangularSet T = random_set({1 + g() % 4, 1 + g() % 4});
      ResidueElement f = elem(T.delta());
      P2Answer a = solve_p2(T, f, {0, 1}, rng);
      std::size_t total = 0;
      for (const auto& C : a.on_zero.components) total += C.delta();
      for (const auto& C : a.off_zero.components) total += C.delta();
      if (total != T.delta()) return false;
    }
    return true;
  });
  run("duality", [&] {
    for (std::size_t it = 0; it < half; ++it) {
      TriangularSet T = random_set({1 + g() % 4, 1 + g() % 4});
      ResidueElement G = elem(T.delta());
      Poly P = elem(T.delta());
      normalize(P);
      std::vector<u64> Fc = P.empty() ? std::vector<u64>{0} : P;
      if (modcomp_via_decomposition(P, G, T, rng) != mod_compose(Fc, {{Fc.size()}}, {G}, T))
        return false;
      LinearForm l = elem(T.delta());
      if (powproj_via_decomposition(l, G, T, T.delta(), rng) != power_project(l, {G}, {{T.delta()}}, T))
        return false;
    }
    return true;
  });
  return out;
}

BenchCell bench_cell(const std::string& op, std::size_t n, std::size_t d, u64 prime, u64 seed) {
  PrimeField F{prime};
  std::mt19937_64 g(seed);
  Rng rng(seed);
  if (n == 0 || d == 0) raise(Errc::InvalidArgument, "n and d must be positive");
  std::vector<std::size_t> dv(n, d);
  auto elem = [&](std::size_t k) {
    ResidueElement a(k);
    for (auto& x : a) x = g() % F.p();
    return a;
  };
  auto random_radical = [&] {
    return interpolate_triset(random_equiprojectable(F, dv, g), identity_order(n));
  };
  // Dense random monic reduced set; radicality is irrelevant to the kernels.
  auto random_dense = [&] {
    std::vector<std::vector<std::vector<u64>>> c(n);
    std::size_t block = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < d; ++a) c[i].push_back(elem(block));
      std::vector<u64> one(block, 0);
      one[0] = 1;
      c[i].push_back(one);
      block *= d;
    }
    return make_triset(F, default_vars(n), c);
  };
  using clock = std::chrono::steady_clock;
  BenchCell cell;
  clock::time_point t0;
  if (op == "quasi-inverse") {
    TriangularSet T = random_radical();
    ResidueElement f = elem(T.delta());
    cell.delta = T.delta();
    t0 = clock::now();
    solve_p2(T, f, identity_order(n), rng);
  } else if (op == "decompose") {
    TriangularSet T = random_radical();
    Order ord = identity_order(n);
    std::reverse(ord.begin(), ord.end());
    cell.delta = T.delta();
    t0 = clock::now();
    solve_p1({{T}, {}, ord}, rng);
  } else if (op == "convert") {
    TriangularSet T = random_radical();
    cell.delta = T.delta();
    t0 = clock::now();
    triset_from_urep(urep_from_triset(T, rng).urep, identity_order(n), rng);
  } else if (op == "modcomp" || op == "powproj") {
    if (n > 2) raise(Errc::UnsupportedArity, "kernels take n <= 2");
    TriangularSet T = random_dense();
    Ring R(T);
    cell.delta = T.delta();
    std::vector<u64> a = elem(T.delta());
    ResidueElement G = elem(T.delta());
    t0 = clock::now();
    if (op == "modcomp") {
      mod_compose(a, {{T.delta()}}, {G}, R);
    } else {
      power_project(a, {G}, {{T.delta()}}, R);
    }
  } else {
    raise(Errc::InvalidArgument, "unknown bench operation '" + op + "'");
  }
  cell.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return cell;
}

}  // namespace trideco
