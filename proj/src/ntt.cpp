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

#include "ntt.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "trideco/error.hpp"

namespace trideco::detail {
namespace {

constexpr u64 kPrimeBound = u64{1} << 30;
constexpr int kMinAdicity = 21;

u64 powm(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

// Montgomery arithmetic for odd q < 2^30, R = 2^32. Transform values are
// kept lazily in [0, 2q); 4q < 2^32 keeps every sum in range.
struct Mont {
  u32 q = 0;
  u32 qneg_inv = 0;  // -q^{-1} mod 2^32
  u32 r2 = 0;        // R^2 mod q

  explicit Mont(u32 mod) : q(mod) {
    u32 inv = mod;
    for (int i = 0; i < 5; ++i) inv *= 2 - mod * inv;
    qneg_inv = 0u - inv;
    r2 = static_cast<u32>((u128{1} << 64) % mod);
  }
  // t < q R gives a result in [0, 2q).
  u32 reduce_lazy(u64 t) const {
    u32 m = static_cast<u32>(t) * qneg_inv;
    return static_cast<u32>((t + static_cast<u64>(m) * q) >> 32);
  }
  u32 reduce(u64 t) const {
    u32 u = reduce_lazy(t);
    return u >= q ? u - q : u;
  }
  u32 mul(u32 a, u32 b) const { return reduce(static_cast<u64>(a) * b); }
  u32 to(u32 a) const { return mul(a, r2); }
};

// Root tables, one array per butterfly level: rt[k][j] = w_{2h}^j with
// h = 2^k, in Montgomery form. Levels are built on demand under a lock and
// never move afterwards, so a reader holding a table of size 2^built can
// run without the lock while another thread builds larger levels.
struct Tables {
  static constexpr int kMaxLog = 31;
  Mont mont;
  int max_log;
  std::array<std::unique_ptr<u32[]>, kMaxLog> rt, irt;
  std::array<u32, kMaxLog + 1> scale{};  // 2^-lg R^2 mod q: undoes 1/R and 1/n
  std::atomic<int> built{0};              // transforms of size <= 2^built are ready
  u64 generator = 0;

  Tables(u32 q, int adicity) : mont(q), max_log(adicity) {
    // A non-residue generates the full 2-Sylow subgroup.
    generator = 2;
    while (powm(generator, (q - 1) / 2, q) != q - 1) ++generator;
    scale[0] = mont.r2;
  }

  // Caller holds the lock.
  void grow(int log_n) {
    const u64 q = mont.q;
    int have = built.load(std::memory_order_relaxed);
    for (int k = have; k < log_n; ++k) {
      std::size_t h = std::size_t{1} << k;
      auto f = std::make_unique<u32[]>(h), b = std::make_unique<u32[]>(h);
      u64 w = powm(generator, (q - 1) / (2 * h), q);
      u64 iw = powm(w, q - 2, q);
      u64 x = 1, ix = 1;
      for (std::size_t j = 0; j < h; ++j) {
        f[j] = mont.to(static_cast<u32>(x));
        b[j] = mont.to(static_cast<u32>(ix));
        x = x * w % q;
        ix = ix * iw % q;
      }
      rt[static_cast<std::size_t>(k)] = std::move(f);
      irt[static_cast<std::size_t>(k)] = std::move(b);
      u64 ninv = powm((u64{1} << (k + 1)) % q, q - 2, q);
      scale[static_cast<std::size_t>(k) + 1] = static_cast<u32>(static_cast<u128>(ninv) * mont.r2 % q);
    }
    if (log_n > have) built.store(log_n, std::memory_order_release);
  }
};

const Tables& tables_for(u32 q, int adicity, int log_n) {
  // The last table used by this thread answers most calls without a lock.
  thread_local const Tables* last = nullptr;
  if (last && last->mont.q == q && last->built.load(std::memory_order_acquire) >= log_n) return *last;
  static std::mutex mu;
  static std::map<u32, std::unique_ptr<Tables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<Tables>(q, adicity);
  slot->grow(log_n);
  last = slot.get();
  return *slot;
}

// Decimation in frequency, natural order in, bit-reversed out. Inputs and
// outputs lie in [0, 2q).
void dif(u32* a, std::size_t n, const Tables& t) {
  const u32 q = t.mont.q, q2 = 2 * q, qi = t.mont.qneg_inv;
  std::size_t level = 0;
  while ((std::size_t{2} << level) < n) ++level;
  for (std::size_t h = n >> 1; h >= 1; h >>= 1, --level) {
    const u32* w = t.rt[level].get();
    for (std::size_t s = 0; s < n; s += 2 * h) {
      u32* x = a + s;
      u32* y = a + s + h;
      for (std::size_t j = 0; j < h; ++j) {
        u32 u = x[j], v = y[j];
        u32 sum = u + v;
        x[j] = sum >= q2 ? sum - q2 : sum;
        u64 prod = static_cast<u64>(u + q2 - v) * w[j];
        u32 m = static_cast<u32>(prod) * qi;
        y[j] = static_cast<u32>((prod + static_cast<u64>(m) * q) >> 32);
      }
    }
  }
}

// Decimation in time, bit-reversed in, natural order out; [0, 2q) in and out.
void dit(u32* a, std::size_t n, const Tables& t) {
  const u32 q = t.mont.q, q2 = 2 * q, qi = t.mont.qneg_inv;
  std::size_t level = 0;
  for (std::size_t h = 1; h < n; h <<= 1, ++level) {
    const u32* w = t.irt[level].get();
    for (std::size_t s = 0; s < n; s += 2 * h) {
      u32* x = a + s;
      u32* y = a + s + h;
      for (std::size_t j = 0; j < h; ++j) {
        u64 prod = static_cast<u64>(y[j]) * w[j];
        u32 m = static_cast<u32>(prod) * qi;
        u32 v = static_cast<u32>((prod + static_cast<u64>(m) * q) >> 32);
        u32 u = x[j];
        u32 sum = u + v, dif = u + q2 - v;
        x[j] = sum >= q2 ? sum - q2 : sum;
        y[j] = dif >= q2 ? dif - q2 : dif;
      }
    }
  }
}

int ceil_log2(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// Product modulo a single NTT prime q; inputs already reduced mod q.
std::vector<u32> conv_mod(u32 q, int adicity, std::vector<u32> fa,
                          std::vector<u32> fb, std::size_t out_len) {
  int lg = ceil_log2(out_len);
  std::size_t n = std::size_t{1} << lg;
  const Tables& t = tables_for(q, adicity, lg);
  const Mont& m = t.mont;
  fa.resize(n, 0);
  fb.resize(n, 0);
  dif(fa.data(), n, t);
  dif(fb.data(), n, t);
  for (std::size_t i = 0; i < n; ++i) fa[i] = m.reduce_lazy(static_cast<u64>(fa[i]) * fb[i]);
  dit(fa.data(), n, t);
  // The pointwise step left a factor 1/R; multiplying by n^-1 R^2 in
  // Montgomery form removes it and applies the 1/n scaling.
  const u32 k = t.scale[static_cast<std::size_t>(lg)];
  for (std::size_t i = 0; i < out_len; ++i) fa[i] = m.mul(fa[i], k);
  fa.resize(out_len);
  return fa;
}

struct CrtPrimes {
  std::vector<u32> q;
  std::vector<int> adicity;
};

const CrtPrimes& crt_primes() {
  static const CrtPrimes primes = [] {
    CrtPrimes c;
    // Largest primes below 2^30 of the form k 2^21 + 1.
    for (u64 k = (kPrimeBound >> kMinAdicity) - 1; k > 0 && c.q.size() < 6; --k) {
      u64 q = (k << kMinAdicity) + 1;
      if (!is_prime_u64(q)) continue;
      int a = 0;
      for (u64 t = q - 1; (t & 1) == 0; t >>= 1) ++a;
      c.q.push_back(static_cast<u32>(q));
      c.adicity.push_back(a);
    }
    return c;
  }();
  return primes;
}

}  // namespace

bool ntt_direct(const PrimeField& F, std::size_t len) {
  if (F.p() >= kPrimeBound || F.p() == 2) return false;
  return ceil_log2(len) <= F.two_adicity();
}

Poly ntt_multiply(const PrimeField& F, const u64* a, std::size_t na,
                  const u64* b, std::size_t nb) {
  std::size_t out_len = na + nb - 1;
  if (ntt_direct(F, out_len)) {
    u32 q = static_cast<u32>(F.p());
    std::vector<u32> fa(a, a + na), fb(b, b + nb);
    auto c = conv_mod(q, F.two_adicity(), std::move(fa), std::move(fb), out_len);
    Poly r(c.begin(), c.end());
    normalize(r);
    return r;
  }
  if (ceil_log2(out_len) > kMinAdicity) {
    raise(Errc::InvalidArgument, "product length exceeds transform capacity");
  }
  const CrtPrimes& cp = crt_primes();
  // Coefficients of the integer product are below min(na,nb) (p-1)^2.
  double need = std::log2(static_cast<double>(std::min(na, nb))) +
                2.0 * std::log2(static_cast<double>(F.p())) + 1.0;
  std::size_t k = 0;
  double have = 0;
  while (have <= need) {
    have += std::log2(static_cast<double>(cp.q[k]));
    ++k;
  }
  std::vector<std::vector<u32>> res(k);
  for (std::size_t i = 0; i < k; ++i) {
    u32 q = cp.q[i];
    std::vector<u32> fa(na), fb(nb);
    for (std::size_t j = 0; j < na; ++j) fa[j] = static_cast<u32>(a[j] % q);
    for (std::size_t j = 0; j < nb; ++j) fb[j] = static_cast<u32>(b[j] % q);
    res[i] = conv_mod(q, cp.adicity[i], std::move(fa), std::move(fb), out_len);
  }
  // Garner: x = v0 + v1 q0 + v2 q0 q1 + ..., then evaluate mod p.
  std::vector<std::vector<u64>> inv(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      inv[j][i] = powm(cp.q[j] % cp.q[i], cp.q[i] - 2, cp.q[i]);
  std::vector<u64> radix_mod_p(k);
  radix_mod_p[0] = 1 % F.p();
  for (std::size_t i = 1; i < k; ++i)
    radix_mod_p[i] = F.mul(radix_mod_p[i - 1], cp.q[i - 1] % F.p());
  Poly r(out_len);
  std::vector<u64> v(k);
  for (std::size_t t = 0; t < out_len; ++t) {
    for (std::size_t i = 0; i < k; ++i) {
      u64 qi = cp.q[i];
      u64 x = res[i][t];
      for (std::size_t j = 0; j < i; ++j) {
        x = (x + qi - v[j] % qi) % qi;
        x = x * inv[j][i] % qi;
      }
      v[i] = x;
    }
    u64 acc = 0;
    for (std::size_t i = 0; i < k; ++i)
      acc = F.add(acc, F.mul(v[i] % F.p(), radix_mod_p[i]));
    r[t] = acc;
  }
  normalize(r);
  return r;
}

}  // namespace trideco::detail
