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

#include "trideco/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

#include "trideco/error.hpp"
#include "trideco/ptree.hpp"

namespace trideco {
namespace {

// Largest d1 for which reduction by T1 goes through a (d1 - 1) x d1 table.
constexpr std::size_t kReductionTableMax = 128;

using Slots = std::vector<Poly>;

Poly slice_poly(const std::vector<u64>& v, std::size_t off, std::size_t len) {
  if (off >= v.size()) return {};
  Poly p(v.begin() + static_cast<std::ptrdiff_t>(off),
         v.begin() + static_cast<std::ptrdiff_t>(std::min(v.size(), off + len)));
  normalize(p);
  return p;
}

Slots truncate_slots(Slots s, std::size_t n) {
  s.resize(n);
  return s;
}

std::size_t ceil_sqrt(std::size_t f) {
  std::size_t r = 1;
  while (r * r < f) ++r;
  return r;
}

std::size_t thread_count() {
  static const std::size_t n = [] {
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* e = std::getenv("TRIDECO_THREADS")) {
      long v = std::strtol(e, nullptr, 10);
      if (v >= 1) hw = std::min<std::size_t>(hw, static_cast<std::size_t>(v));
    }
    return hw;
  }();
  return n;
}

}  // namespace

struct Ring::Impl {
  PrimeField F{2};
  std::size_t d1 = 1, d2 = 1;
  Modulus m1;
  Poly revT1;  // rev_{d1}(T1)
  Poly inv1;   // 1 / rev(T1) mod Z^{2 d1 - 1}
  // Row j is X1^(d1 + j) mod T1, j < d1 - 1; empty when d1 is too large
  // for the quadratic table to pay off.
  std::vector<u64> redmat;
  Slots t2;    // T2 coefficients t_0..t_{d2}; n = 1 uses T2 = X2
  Slots invT2;  // 1 / rev(T2) over R1, 2 d2 - 1 slots
  mutable std::once_flag trace_once;
  mutable LinearForm trace;

  Slots to_slots(const ResidueElement& a) const {
    Slots s(d2);
    for (std::size_t k = 0; k < d2; ++k) s[k] = slice_poly(a, k * d1, d1);
    return s;
  }

  ResidueElement from_slots(const Slots& s) const {
    ResidueElement out(d1 * d2, 0);
    for (std::size_t k = 0; k < std::min(d2, s.size()); ++k)
      std::copy(s[k].begin(), s[k].end(), out.begin() + static_cast<std::ptrdiff_t>(k * d1));
    return out;
  }

  // Product of two polynomials in Z with coefficients in R1. Only the
  // first `keep` slots of the product are reduced and returned.
  Slots mul_over_T1(const Slots& a, const Slots& b,
                    std::size_t keep = std::numeric_limits<std::size_t>::max()) const {
    if (a.empty() || b.empty()) return {};
    const std::size_t s = 2 * d1 - 1;
    auto pack = [&](const Slots& x) {
      Poly out(x.size() * s, 0);
      for (std::size_t k = 0; k < x.size(); ++k)
        std::copy(x[k].begin(), x[k].end(), out.begin() + static_cast<std::ptrdiff_t>(k * s));
      normalize(out);
      return out;
    };
    Poly c = poly_mul(F, pack(a), pack(b));
    return reduce_slots(c, s, std::min(keep, a.size() + b.size() - 1));
  }

  // Slots k < count of c (stride s, degree <= 2 d1 - 2 each) reduced by T1.
  Slots reduce_slots(const Poly& c, std::size_t s, std::size_t count) const {
    Slots out(count);
    if (redmat.empty() || count < 2) {
      for (std::size_t k = 0; k < count; ++k) out[k] = m1.rem(F, slice_poly(c, k * s, s));
      return out;
    }
    // All high parts at once: row k holds c_k[d1 + j], j < d1 - 1.
    const std::size_t h = d1 - 1;
    std::vector<u64> hi(count * h, 0);
    for (std::size_t k = 0; k < count; ++k)
      for (std::size_t j = 0; j < h; ++j) hi[k * h + j] = coeff(c, k * s + d1 + j);
    std::vector<u64> folded = detail::matmul(F, hi, redmat, count, h, d1);
    for (std::size_t k = 0; k < count; ++k) {
      Poly r(d1);
      for (std::size_t i = 0; i < d1; ++i) r[i] = F.add(coeff(c, k * s + i), folded[k * d1 + i]);
      normalize(r);
      out[k] = std::move(r);
    }
    return out;
  }

  // Extends a form on R1 from its d1 basis values to l(X1^j), j < 2 d1 - 1.
  Poly ext1(const Poly& l) const {
    Poly n = mul_trunc(F, l, revT1, d1);
    return mul_trunc(F, n, inv1, 2 * d1 - 1);
  }

  // Slot k, value j: sum over u + v = k of (a_u . l_v)(X1^j), where each
  // l_v is an extended form.
  std::vector<std::vector<u64>> dual_mul(const Slots& a, const Slots& lext) const {
    const std::size_t s = 3 * d1 - 2;
    Poly pa(a.size() * s, 0), pl(lext.size() * s, 0);
    for (std::size_t u = 0; u < a.size(); ++u) {
      Poly r = rev(a[u], d1 - 1);
      std::copy(r.begin(), r.end(), pa.begin() + static_cast<std::ptrdiff_t>(u * s));
    }
    for (std::size_t v = 0; v < lext.size(); ++v)
      std::copy(lext[v].begin(), lext[v].end(), pl.begin() + static_cast<std::ptrdiff_t>(v * s));
    normalize(pa);
    normalize(pl);
    Poly c = poly_mul(F, pa, pl);
    std::vector<std::vector<u64>> out(a.size() + lext.size() - 1, std::vector<u64>(d1, 0));
    for (std::size_t k = 0; k < out.size(); ++k)
      for (std::size_t j = 0; j < d1; ++j) out[k][j] = coeff(c, k * s + d1 - 1 + j);
    return out;
  }

  Slots series_inv_over_T1(const Slots& h, std::size_t L) const {
    Slots g{Poly{1}};
    std::size_t len = 1;
    while (len < L) {
      std::size_t len2 = std::min(2 * len, L);
      Slots hl(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(std::min(h.size(), len2)));
      Slots e = mul_over_T1(hl, g, len2);
      for (auto& x : e) x = neg(F, x);
      e[0] = add(F, e[0], Poly{2 % F.p()});
      g = truncate_slots(mul_over_T1(g, e, len2), len2);
      len = len2;
    }
    return g;
  }
};

Ring::Ring(TriangularSet T) : T_(std::move(T)), impl_(std::make_unique<Impl>()) {
  validate(T_);
  if (T_.n() > 2) raise(Errc::UnsupportedArity, "fast kernels need n <= 2");
  Impl& I = *impl_;
  I.F = T_.F;
  I.d1 = T_.d[0];
  Poly T1 = slice_poly(T_.polys[0], 0, I.d1 + 1);
  I.m1 = Modulus(I.F, T1);
  I.revT1 = rev(T1, I.d1);
  I.inv1 = series_inv(I.F, I.revT1, 2 * I.d1 - 1);
  if (I.d1 >= 2 && I.d1 <= kReductionTableMax) {
    const std::size_t d1 = I.d1;
    I.redmat.assign((d1 - 1) * d1, 0);
    Poly r(d1);
    for (std::size_t i = 0; i < d1; ++i) r[i] = I.F.neg(coeff(T1, i));
    for (std::size_t j = 0; j + 1 < d1; ++j) {
      std::copy(r.begin(), r.end(), I.redmat.begin() + static_cast<std::ptrdiff_t>(j * d1));
      // r <- X1 r mod T1
      u64 top = r[d1 - 1];
      for (std::size_t i = d1 - 1; i > 0; --i) r[i] = I.F.sub(r[i - 1], I.F.mul(top, coeff(T1, i)));
      r[0] = I.F.neg(I.F.mul(top, coeff(T1, 0)));
    }
  }
  if (T_.n() == 2) {
    I.d2 = T_.d[1];
    for (std::size_t k = 0; k <= I.d2; ++k) I.t2.push_back(slice_poly(T_.polys[1], k * I.d1, I.d1));
  } else {
    I.d2 = 1;
    I.t2 = {Poly{}, Poly{1}};
  }
  Slots revT2(I.d2 + 1);
  for (std::size_t k = 0; k <= I.d2; ++k) revT2[k] = I.t2[I.d2 - k];
  I.invT2 = I.series_inv_over_T1(revT2, 2 * I.d2 - 1);
}

Ring::~Ring() = default;
Ring::Ring(Ring&&) noexcept = default;
Ring& Ring::operator=(Ring&&) noexcept = default;

ResidueElement Ring::mul(const ResidueElement& a, const ResidueElement& b) const {
  const Impl& I = *impl_;
  if (a.size() != delta() || b.size() != delta()) raise(Errc::LengthMismatch, "element size");
  Slots C = I.mul_over_T1(I.to_slots(a), I.to_slots(b));
  const std::size_t d2 = I.d2;
  if (d2 == 1) return I.from_slots(C);
  // C = Q T2 + R; rev(Q) = rev(C) / rev(T2) mod Z^{d2 - 1}.
  Slots H(d2 - 1);
  for (std::size_t i = 0; i + 1 < d2; ++i) H[i] = C[2 * d2 - 2 - i];
  Slots inv(I.invT2.begin(), I.invT2.begin() + static_cast<std::ptrdiff_t>(d2 - 1));
  Slots revQ = I.mul_over_T1(H, inv, d2 - 1);
  Slots Q(d2 - 1);
  for (std::size_t i = 0; i + 1 < d2; ++i) Q[i] = revQ[d2 - 2 - i];
  Slots low(I.t2.begin(), I.t2.begin() + static_cast<std::ptrdiff_t>(d2));
  Slots QT = I.mul_over_T1(Q, low, d2);
  Slots R(d2);
  for (std::size_t i = 0; i < d2; ++i) R[i] = sub(I.F, C[i], QT[i]);
  return I.from_slots(R);
}

LinearForm Ring::transposed_mul(const ResidueElement& a, const LinearForm& l) const {
  const Impl& I = *impl_;
  if (a.size() != delta() || l.size() != delta()) raise(Errc::LengthMismatch, "element size");
  const std::size_t d1 = I.d1, d2 = I.d2;
  auto ext_all = [&](const std::vector<std::vector<u64>>& forms, std::size_t count) {
    Slots out(count);
    for (std::size_t k = 0; k < count; ++k) {
      Poly f(forms[k]);
      normalize(f);
      out[k] = I.ext1(f);
    }
    return out;
  };
  // Lambda_b = l(. X2^b) satisfies rev(T2) * Lambda = N with deg N < d2.
  std::vector<std::vector<u64>> lam(d2);
  for (std::size_t b = 0; b < d2; ++b)
    lam[b].assign(l.begin() + static_cast<std::ptrdiff_t>(b * d1),
                  l.begin() + static_cast<std::ptrdiff_t>((b + 1) * d1));
  std::vector<std::vector<u64>> E;
  if (d2 == 1) {
    E = lam;
  } else {
    Slots revT2(d2 + 1);
    for (std::size_t k = 0; k <= d2; ++k) revT2[k] = I.t2[d2 - k];
    auto N = I.dual_mul(revT2, ext_all(lam, d2));
    E = I.dual_mul(I.invT2, ext_all(N, d2));
    E.resize(2 * d2 - 1);
  }
  Slots ra = I.to_slots(a);
  std::reverse(ra.begin(), ra.end());
  auto P = I.dual_mul(ra, ext_all(E, E.size()));
  LinearForm out(delta(), 0);
  for (std::size_t j = 0; j < d2; ++j)
    std::copy(P[d2 - 1 + j].begin(), P[d2 - 1 + j].end(),
              out.begin() + static_cast<std::ptrdiff_t>(j * d1));
  return out;
}

const LinearForm& Ring::trace() const {
  const Impl& I = *impl_;
  std::call_once(I.trace_once, [&] {
    const std::size_t d1 = I.d1, d2 = I.d2;
    std::vector<u64> tau1 = power_sums(I.F, I.m1.poly(), d1);
    if (n() == 1) {
      I.trace = tau1;
      return;
    }
    // sigma_k = tr_{R/R1}(X2^k) from rev(dT2/dX2) / rev(T2) over R1.
    Slots num(d2);
    for (std::size_t i = 0; i < d2; ++i) num[i] = scale(I.F, I.t2[d2 - i], I.F.reduce(d2 - i));
    Slots inv(I.invT2.begin(), I.invT2.begin() + static_cast<std::ptrdiff_t>(d2));
    Slots sigma = I.mul_over_T1(num, inv, d2);
    Poly t1(tau1);
    normalize(t1);
    auto P = I.dual_mul(sigma, Slots{I.ext1(t1)});
    I.trace.assign(delta(), 0);
    for (std::size_t k = 0; k < d2; ++k)
      std::copy(P[k].begin(), P[k].end(), I.trace.begin() + static_cast<std::ptrdiff_t>(k * d1));
  });
  return I.trace;
}

ResidueElement ring_mul(const ResidueElement& a, const ResidueElement& b,
                        const TriangularSet& T) {
  return Ring(T).mul(a, b);
}

LinearForm transposed_mul(const ResidueElement& a, const LinearForm& l,
                          const TriangularSet& T) {
  return Ring(T).transposed_mul(a, l);
}

namespace detail {

std::vector<u64> matmul(const PrimeField& F, const std::vector<u64>& a,
                        const std::vector<u64>& b, std::size_t rows,
                        std::size_t inner, std::size_t cols) {
  std::vector<u64> c(rows * cols, 0);
  const u64 p = F.p();
  // Products are accumulated unreduced in batches that cannot overflow.
  std::size_t batch = 0;
  if (F.small()) {
    const u64 sq = (p - 1) * (p - 1);
    batch = sq == 0 ? inner : static_cast<std::size_t>(
                                  std::min<u64>((std::numeric_limits<u64>::max() - p) / sq, 1u << 20));
  }
  auto work = [&](std::size_t r0, std::size_t r1) {
    std::vector<u64> acc(cols);
    for (std::size_t r = r0; r < r1; ++r) {
      std::fill(acc.begin(), acc.end(), 0);
      const u64* arow = a.data() + r * inner;
      if (batch > 0) {
        std::size_t pending = 0;
        for (std::size_t k = 0; k < inner; ++k) {
          const u64 x = arow[k];
          if (x == 0) continue;
          const u64* brow = b.data() + k * cols;
          for (std::size_t j = 0; j < cols; ++j) acc[j] += x * brow[j];
          if (++pending == batch) {
            for (auto& v : acc) v %= p;
            pending = 0;
          }
        }
        for (auto& v : acc) v %= p;
      } else {
        for (std::size_t k = 0; k < inner; ++k) {
          const u64 x = arow[k];
          if (x == 0) continue;
          const u64* brow = b.data() + k * cols;
          for (std::size_t j = 0; j < cols; ++j) acc[j] = F.add(acc[j], F.mul(x, brow[j]));
        }
      }
      std::copy(acc.begin(), acc.end(), c.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
  };
  std::size_t nt = std::min(thread_count(), rows);
  if (nt <= 1 || rows * inner * cols < (1u << 20)) {
    work(0, rows);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (rows + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
      std::size_t r0 = t * chunk, r1 = std::min(rows, r0 + chunk);
      if (r0 < r1) pool.emplace_back(work, r0, r1);
    }
    for (auto& th : pool) th.join();
  }
  return c;
}

}  // namespace detail

namespace {

struct BabySteps {
  std::size_t f[2] = {1, 1};
  std::size_t e[2] = {1, 1};
  std::size_t ep[2] = {1, 1};
  std::vector<ResidueElement> B;  // B[j1 + ep1 j2] = G1^j1 G2^j2
  ResidueElement gamma[2];        // G1^ep1, G2^ep2
};

BabySteps baby_steps(const std::vector<ResidueElement>& G, const DegreeBounds& bounds,
                     const Ring& R, KernelStats& st) {
  const std::size_t m = G.size();
  if (m < 1 || m > 2) raise(Errc::UnsupportedArity, "composition needs m in {1, 2}");
  if (bounds.f.size() != m) raise(Errc::LengthMismatch, "bounds and G disagree on m");
  for (auto x : bounds.f)
    if (x == 0) raise(Errc::InvalidArgument, "degree bounds must be positive");
  // Univariate bounds may exceed delta_T; the blocking stays exact.
  if (m == 2 && bounds.delta_f() > R.delta())
    raise(Errc::BoundsExceedRingDegree, "delta_f exceeds delta_T");
  for (const auto& g : G)
    if (g.size() != R.delta()) raise(Errc::LengthMismatch, "element size");
  BabySteps bs;
  for (std::size_t i = 0; i < m; ++i) {
    bs.f[i] = bounds.f[i];
    bs.ep[i] = ceil_sqrt(bs.f[i]);
    bs.e[i] = (bs.f[i] + bs.ep[i] - 1) / bs.ep[i];
  }
  const std::size_t ep1 = bs.ep[0], ep2 = bs.ep[1];
  bs.B.resize(ep1 * ep2);
  bs.B[0] = R.one();
  for (std::size_t j2 = 0; j2 < ep2; ++j2) {
    for (std::size_t j1 = 0; j1 < ep1; ++j1) {
      if (j1 == 0 && j2 == 0) continue;
      if (j1 > 0) {
        bs.B[j1 + ep1 * j2] = R.mul(bs.B[j1 - 1 + ep1 * j2], G[0]);
      } else {
        bs.B[ep1 * j2] = R.mul(bs.B[ep1 * (j2 - 1)], G[1]);
      }
      ++st.ring_muls;
    }
  }
  if (bs.e[0] > 1) {
    bs.gamma[0] = R.mul(bs.B[ep1 - 1], G[0]);
    ++st.ring_muls;
  }
  if (m == 2 && bs.e[1] > 1) {
    bs.gamma[1] = R.mul(bs.B[ep1 * (ep2 - 1)], G[1]);
    ++st.ring_muls;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    st.eps[i] = bs.e[i];
    st.eps_prime[i] = bs.ep[i];
  }
  return bs;
}

}  // namespace

ResidueElement mod_compose(const std::vector<u64>& Fc, const DegreeBounds& bounds,
                           const std::vector<ResidueElement>& G, const Ring& R,
                           KernelStats* stats) {
  KernelStats st;
  if (Fc.size() != bounds.delta_f()) raise(Errc::LengthMismatch, "F does not match its bounds");
  BabySteps bs = baby_steps(G, bounds, R, st);
  const std::size_t delta = R.delta();
  const std::size_t e1 = bs.e[0], e2 = bs.e[1], ep1 = bs.ep[0], ep2 = bs.ep[1];
  const std::size_t f1 = bs.f[0], f2 = bs.f[1];
  const std::size_t K = ep1 * ep2;
  const PrimeField& Fp = R.field();
  // Row i1 + e1 i2 holds the slice of F multiplying gamma1^i1 gamma2^i2.
  std::vector<u64> M(e1 * e2 * K, 0);
  for (std::size_t i2 = 0; i2 < e2; ++i2)
    for (std::size_t i1 = 0; i1 < e1; ++i1)
      for (std::size_t j2 = 0; j2 < ep2; ++j2)
        for (std::size_t j1 = 0; j1 < ep1; ++j1) {
          std::size_t c1 = i1 * ep1 + j1, c2 = i2 * ep2 + j2;
          if (c1 < f1 && c2 < f2) M[(i1 + e1 * i2) * K + j1 + ep1 * j2] = Fp.reduce(Fc[c1 + f1 * c2]);
        }
  std::vector<u64> Bm(K * delta);
  for (std::size_t j = 0; j < K; ++j)
    std::copy(bs.B[j].begin(), bs.B[j].end(), Bm.begin() + static_cast<std::ptrdiff_t>(j * delta));
  std::vector<u64> H = detail::matmul(Fp, M, Bm, e1 * e2, K, delta);
  auto row = [&](std::size_t i) {
    return ResidueElement(H.begin() + static_cast<std::ptrdiff_t>(i * delta),
                          H.begin() + static_cast<std::ptrdiff_t>((i + 1) * delta));
  };
  auto axpy = [&](const ResidueElement& acc, const ResidueElement& g, ResidueElement add_term) {
    ResidueElement prod = R.mul(acc, g);
    ++st.ring_muls;
    for (std::size_t t = 0; t < delta; ++t) add_term[t] = Fp.add(add_term[t], prod[t]);
    return add_term;
  };
  ResidueElement result;
  for (std::size_t i2 = e2; i2-- > 0;) {
    ResidueElement inner = row(e1 - 1 + e1 * i2);
    for (std::size_t i1 = e1 - 1; i1-- > 0;) inner = axpy(inner, bs.gamma[0], row(i1 + e1 * i2));
    result = i2 == e2 - 1 ? inner : axpy(result, bs.gamma[1], inner);
  }
  if (stats) *stats = st;
  return result;
}

ResidueElement mod_compose(const std::vector<u64>& F, const DegreeBounds& bounds,
                           const std::vector<ResidueElement>& G, const TriangularSet& T) {
  return mod_compose(F, bounds, G, Ring(T));
}

std::vector<u64> power_project(const LinearForm& l, const std::vector<ResidueElement>& G,
                               const DegreeBounds& bounds, const Ring& R,
                               KernelStats* stats) {
  KernelStats st;
  if (l.size() != R.delta()) raise(Errc::LengthMismatch, "form size");
  BabySteps bs = baby_steps(G, bounds, R, st);
  const std::size_t delta = R.delta();
  const std::size_t e1 = bs.e[0], e2 = bs.e[1], ep1 = bs.ep[0], ep2 = bs.ep[1];
  const std::size_t f1 = bs.f[0], f2 = bs.f[1];
  const std::size_t K = ep1 * ep2;
  // Forms gamma1^i1 gamma2^i2 . l, transposing the Horner phase.
  std::vector<LinearForm> L(e1 * e2);
  for (std::size_t i2 = 0; i2 < e2; ++i2) {
    for (std::size_t i1 = 0; i1 < e1; ++i1) {
      std::size_t idx = i1 + e1 * i2;
      if (idx == 0) {
        L[0] = l;
        continue;
      }
      L[idx] = i1 > 0 ? R.transposed_mul(bs.gamma[0], L[idx - 1])
                      : R.transposed_mul(bs.gamma[1], L[e1 * (i2 - 1)]);
      ++st.transposed_muls;
    }
  }
  std::vector<u64> Lm(e1 * e2 * delta), Bt(delta * K);
  for (std::size_t i = 0; i < L.size(); ++i)
    std::copy(L[i].begin(), L[i].end(), Lm.begin() + static_cast<std::ptrdiff_t>(i * delta));
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t t = 0; t < delta; ++t) Bt[t * K + j] = bs.B[j][t];
  std::vector<u64> P = detail::matmul(R.field(), Lm, Bt, e1 * e2, delta, K);
  std::vector<u64> out(f1 * f2, 0);
  for (std::size_t c2 = 0; c2 < f2; ++c2)
    for (std::size_t c1 = 0; c1 < f1; ++c1) {
      std::size_t i1 = c1 / ep1, j1 = c1 % ep1, i2 = c2 / ep2, j2 = c2 % ep2;
      out[c1 + f1 * c2] = P[(i1 + e1 * i2) * K + j1 + ep1 * j2];
    }
  if (stats) *stats = st;
  return out;
}

std::vector<u64> power_project(const LinearForm& l, const std::vector<ResidueElement>& G,
                               const DegreeBounds& bounds, const TriangularSet& T) {
  return power_project(l, G, bounds, Ring(T));
}

LinearForm trace_form(const TriangularSet& T) { return Ring(T).trace(); }

Poly char_poly(const ResidueElement& A, const Ring& R) {
  const std::size_t delta = R.delta();
  if (R.field().p() <= delta) raise(Errc::CharacteristicTooSmall, "need p > delta_T");
  LinearForm l = R.transposed_mul(A, R.trace());
  std::vector<u64> s = power_project(l, {A}, DegreeBounds{{delta}}, R);
  return poly_from_power_sums(R.field(), s, delta);
}

Poly char_poly(const ResidueElement& A, const TriangularSet& T) {
  return char_poly(A, Ring(T));
}

namespace detail {

ResidueElement compose_any(const Poly& F, const ResidueElement& G, const Ring& R) {
  const std::size_t delta = R.delta();
  if (F.empty()) return ResidueElement(delta, 0);
  auto chunk = [&](std::size_t k) {
    std::size_t lo = k * delta, hi = std::min(F.size(), lo + delta);
    std::vector<u64> c(F.begin() + static_cast<std::ptrdiff_t>(lo),
                       F.begin() + static_cast<std::ptrdiff_t>(hi));
    return mod_compose(c, DegreeBounds{{c.size()}}, {G}, R);
  };
  const std::size_t K = (F.size() + delta - 1) / delta;
  if (K == 1) return chunk(0);
  // G^delta by repeated squaring.
  ResidueElement Gd = R.one(), base = G;
  for (std::size_t e = delta; e > 0; e >>= 1) {
    if (e & 1) Gd = R.mul(Gd, base);
    if (e > 1) base = R.mul(base, base);
  }
  ResidueElement acc = chunk(K - 1);
  for (std::size_t k = K - 1; k-- > 0;) {
    acc = R.mul(acc, Gd);
    ResidueElement c = chunk(k);
    for (std::size_t t = 0; t < delta; ++t) acc[t] = R.field().add(acc[t], c[t]);
  }
  return acc;
}

Poly generalized_inverse(const ResidueElement& A, const ResidueElement& B, const Ring& R,
                         const Poly& chi) {
  const PrimeField& F = R.field();
  Poly dchi = derivative(F, chi);
  Poly g = poly_gcd(F, chi, dchi);
  Poly rad = is_one(g) ? chi : poly_quo(F, chi, g);
  const std::size_t c = static_cast<std::size_t>(deg(rad));
  // sum_i tr(B A^i) Z^i = sum_alpha w_alpha / (1 - alpha Z); w_alpha = m_alpha U(alpha).
  std::vector<u64> sb = power_project(R.transposed_mul(B, R.trace()), {A}, DegreeBounds{{c}}, R);
  Poly SB(sb);
  normalize(SB);
  Poly H = rev(mul_trunc(F, SB, rev(rad, c), c), c - 1);
  // D = chi' rad / chi = sum_alpha m_alpha prod_{beta != alpha} (X - beta).
  Poly D = is_one(g) ? dchi : poly_quo(F, dchi, g);
  Poly Dinv = invmod(F, poly_rem(F, D, rad), rad);
  return mulmod(F, poly_rem(F, H, rad), Dinv, rad);
}

}  // namespace detail

InverseComposition inverse_mod_compose(const ResidueElement& A, const ResidueElement& B,
                                       const Ring& R) {
  if (B.size() != R.delta()) raise(Errc::LengthMismatch, "element size");
  Poly chi = char_poly(A, R);
  if (!is_squarefree(R.field(), chi)) raise(Errc::NotSeparating, "characteristic polynomial is not squarefree");
  InverseComposition r;
  r.U = detail::generalized_inverse(A, B, R, chi);
  if (detail::compose_any(r.U, A, R) != B)
    raise(Errc::NotInSubalgebra, "B is not a polynomial in A");
  r.verified = true;
  return r;
}

InverseComposition inverse_mod_compose(const ResidueElement& A, const ResidueElement& B,
                                       const TriangularSet& T) {
  return inverse_mod_compose(A, B, Ring(T));
}

ResidueElement invert_element(const ResidueElement& A, const Ring& R) {
  const PrimeField& F = R.field();
  Poly chi = char_poly(A, R);
  u64 c0 = coeff(chi, 0);
  if (c0 == 0) raise(Errc::ZeroDivisor, "element is not invertible");
  // A * ((chi - chi(0)) / X)(A) = -chi(0).
  Poly q(chi.begin() + 1, chi.end());
  ResidueElement r = detail::compose_any(q, A, R);
  u64 s = F.neg(F.inv(c0));
  for (auto& x : r) x = F.mul(x, s);
  return r;
}

ResidueElement invert_element(const ResidueElement& A, const TriangularSet& T) {
  return invert_element(A, Ring(T));
}

namespace detail {

LinearForm tower_trace_form(const TriangularSet& T) {
  validate(T);
  const PrimeField& F = T.F;
  Poly T1 = slice_poly(T.polys[0], 0, T.d[0] + 1);
  LinearForm tr = power_sums(F, T1, T.d[0]);
  for (std::size_t i = 1; i < T.n(); ++i) {
    const std::size_t d = T.d[i], db = T.delta_below(i);
    // sigma_j = tr_{R_i / R_{<i}}(Xi^j) by the Newton recurrence
    // sigma_j = (d - j) t_{d-j} - sum_{k=1..j} t_{d-k} sigma_{j-k}.
    std::vector<ResidueElement> sigma(d);
    for (std::size_t j = 0; j < d; ++j) {
      ResidueElement s = T.coeff(i, d - j);
      u64 w = F.reduce(d - j);
      for (auto& x : s) x = F.mul(x, w);
      for (std::size_t k = 1; k <= j; ++k) {
        ResidueElement prod = tower_mul(T, i, T.coeff(i, d - k), sigma[j - k]);
        for (std::size_t t = 0; t < db; ++t) s[t] = F.sub(s[t], prod[t]);
      }
      sigma[j] = std::move(s);
    }
    LinearForm next(db * d, 0);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t m = 0; m < db; ++m) {
        ResidueElement e(db, 0);
        e[m] = 1;
        next[j * db + m] = apply_form(F, tr, tower_mul(T, i, e, sigma[j]));
      }
    }
    tr = std::move(next);
  }
  return tr;
}

}  // namespace detail
}  // namespace trideco
