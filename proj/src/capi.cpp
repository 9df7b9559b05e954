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

#include "trideco/trideco.h"

#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "trideco/error.hpp"
#include "trideco/io.hpp"
#include "trideco/kernels.hpp"
#include "trideco/verbs.hpp"

struct trideco_context {
  trideco::Rng rng;
  std::string last_error;
};

struct trideco_doc {
  trideco::TriSetDoc doc;
};

struct trideco_triset {
  trideco::TriangularSet T;
  mutable std::mutex mu;
  mutable std::unique_ptr<trideco::Ring> ring;

  const trideco::Ring& get_ring() const {
    std::lock_guard<std::mutex> lock(mu);
    if (!ring) ring = std::make_unique<trideco::Ring>(T);
    return *ring;
  }
};

namespace {

using trideco::Errc;

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class Fn>
trideco_status guard(trideco_context* ctx, Fn&& fn) {
  if (!ctx) return TRIDECO_E_NULL_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return TRIDECO_OK;
  } catch (const NullArgument& e) {
    ctx->last_error = e.what();
    return TRIDECO_E_NULL_ARGUMENT;
  } catch (const trideco::ParseError& e) {
    ctx->last_error = e.what();
    return TRIDECO_E_PARSE;
  } catch (const trideco::Error& e) {
    ctx->last_error = e.what();
    return static_cast<trideco_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return TRIDECO_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw NullArgument(std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* r = static_cast<char*>(std::malloc(s.size() + 1));
  if (!r) throw std::bad_alloc();
  std::memcpy(r, s.c_str(), s.size() + 1);
  return r;
}

std::optional<std::string> opt(const char* s) {
  if (!s) return std::nullopt;
  return std::string(s);
}

trideco::Via via_of(trideco_via v) {
  return v == TRIDECO_VIA_DECOMPOSITION ? trideco::Via::Decomposition : trideco::Via::Kernel;
}

std::vector<uint64_t> span(const uint64_t* a, std::size_t n) { return {a, a + n}; }

void copy_out(const std::vector<uint64_t>& v, uint64_t* out) {
  std::copy(v.begin(), v.end(), out);
}

std::vector<trideco::ResidueElement> elements(const uint64_t* const* G, std::size_t m,
                                              std::size_t delta) {
  need(G, "G");
  std::vector<trideco::ResidueElement> r;
  for (std::size_t j = 0; j < m; ++j) {
    need(G[j], "G[j]");
    r.push_back(span(G[j], delta));
  }
  return r;
}

}  // namespace

extern "C" {

const char* trideco_version(void) { return "1.0.0"; }

const char* trideco_status_name(trideco_status s) {
  if (s == TRIDECO_OK) return "Ok";
  if (s >= 1 && s <= 20) return trideco::errc_name(static_cast<Errc>(s - 1));
  switch (s) {
    case TRIDECO_E_PARSE: return "ParseError";
    case TRIDECO_E_NULL_ARGUMENT: return "NullArgument";
    case TRIDECO_E_INTERNAL: return "InternalError";
    default: return "Unknown";
  }
}

int trideco_status_exit_code(trideco_status s) {
  if (s == TRIDECO_OK) return 0;
  if (s >= 1 && s <= 20) return 2;
  if (s == TRIDECO_E_PARSE) return 3;
  return 1;
}

trideco_status trideco_context_new(uint64_t seed, size_t max_retries, trideco_context** out) {
  if (!out) return TRIDECO_E_NULL_ARGUMENT;
  *out = new (std::nothrow) trideco_context{trideco::Rng(seed, max_retries), {}};
  return *out ? TRIDECO_OK : TRIDECO_E_INTERNAL;
}

void trideco_context_free(trideco_context* ctx) { delete ctx; }

const char* trideco_context_last_error(const trideco_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

trideco_status trideco_context_retry_stats(const trideco_context* ctx, size_t* loops,
                                           size_t* attempts, size_t* max_attempts,
                                           size_t* exhausted) {
  if (!ctx) return TRIDECO_E_NULL_ARGUMENT;
  const auto& s = ctx->rng.stats();
  if (loops) *loops = s.loops;
  if (attempts) *attempts = s.attempts;
  if (max_attempts) *max_attempts = s.max_attempts;
  if (exhausted) *exhausted = s.exhausted;
  return TRIDECO_OK;
}

void trideco_string_free(char* s) { std::free(s); }

trideco_status trideco_doc_parse(trideco_context* ctx, const char* text, trideco_doc** out) {
  return guard(ctx, [&] {
    need(text, "text");
    need(out, "out");
    *out = new trideco_doc{trideco::parse_trisetfile(text)};
  });
}

void trideco_doc_free(trideco_doc* doc) { delete doc; }

trideco_status trideco_doc_print(trideco_context* ctx, const trideco_doc* doc, char** out) {
  return guard(ctx, [&] {
    need(doc, "doc");
    need(out, "out");
    *out = dup_string(trideco::print_trisetfile(doc->doc));
  });
}

size_t trideco_doc_chain_count(const trideco_doc* doc) { return doc ? doc->doc.chains.size() : 0; }

trideco_status trideco_doc_chain(trideco_context* ctx, const trideco_doc* doc, size_t i,
                                 trideco_triset** out) {
  return guard(ctx, [&] {
    need(doc, "doc");
    need(out, "out");
    if (i >= doc->doc.chains.size()) trideco::raise(Errc::InvalidArgument, "chain index out of range");
    auto* t = new trideco_triset;
    t->T = doc->doc.chains[i].T;
    *out = t;
  });
}

trideco_status trideco_decompose(trideco_context* ctx, const trideco_doc* in, const char* order,
                                 trideco_doc** out) {
  return guard(ctx, [&] {
    need(in, "in");
    need(out, "out");
    *out = new trideco_doc{trideco::verb_decompose(in->doc, opt(order), ctx->rng)};
  });
}

trideco_status trideco_change_order(trideco_context* ctx, const trideco_doc* in,
                                    const char* source_order, const char* target_order,
                                    trideco_doc** out) {
  return guard(ctx, [&] {
    need(in, "in");
    need(target_order, "target_order");
    need(out, "out");
    *out = new trideco_doc{
        trideco::verb_change_order(in->doc, opt(source_order), target_order, ctx->rng)};
  });
}

trideco_status trideco_quasi_inverse(trideco_context* ctx, const trideco_doc* in,
                                     const char* target_order, trideco_doc** out) {
  return guard(ctx, [&] {
    need(in, "in");
    need(out, "out");
    *out = new trideco_doc{trideco::verb_quasi_inverse(in->doc, opt(target_order), ctx->rng)};
  });
}

trideco_status trideco_modcomp(trideco_context* ctx, const trideco_doc* in, trideco_via via,
                               char** out) {
  return guard(ctx, [&] {
    need(in, "in");
    need(out, "out");
    *out = dup_string(trideco::verb_modcomp(in->doc, via_of(via), ctx->rng));
  });
}

trideco_status trideco_powproj(trideco_context* ctx, const trideco_doc* in, trideco_via via,
                               char** out) {
  return guard(ctx, [&] {
    need(in, "in");
    need(out, "out");
    *out = dup_string(trideco::verb_powproj(in->doc, via_of(via), ctx->rng));
  });
}

trideco_status trideco_selfcheck(trideco_context* ctx, size_t count, char** report,
                                 int* all_passed) {
  return guard(ctx, [&] {
    need(report, "report");
    std::string text;
    bool ok = true;
    for (const auto& r : trideco::selfcheck(ctx->rng, count)) {
      text += (r.passed ? "PASS " : "FAIL ") + r.name;
      if (!r.detail.empty()) text += " (" + r.detail + ")";
      text += "\n";
      ok = ok && r.passed;
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    *report = dup_string(text);
  });
}

trideco_status trideco_bench_cell(trideco_context* ctx, const char* op, size_t n, size_t d,
                                  uint64_t prime, uint64_t seed, size_t* delta, double* seconds) {
  return guard(ctx, [&] {
    need(op, "op");
    trideco::BenchCell c = trideco::bench_cell(op, n, d, prime, seed);
    if (delta) *delta = c.delta;
    if (seconds) *seconds = c.seconds;
  });
}

trideco_status trideco_triset_new(trideco_context* ctx, uint64_t p, size_t n, const size_t* d,
                                  const uint64_t* const* polys, trideco_triset** out) {
  return guard(ctx, [&] {
    need(out, "out");
    if (n) {
      need(d, "d");
      need(polys, "polys");
    }
    auto t = std::make_unique<trideco_triset>();
    t->T.F = trideco::PrimeField(p);
    t->T.vars = trideco::default_vars(n);
    std::size_t block = 1;
    for (std::size_t i = 0; i < n; ++i) {
      need(polys[i], "polys[i]");
      t->T.d.push_back(d[i]);
      t->T.polys.push_back(span(polys[i], (d[i] + 1) * block));
      block *= d[i];
    }
    trideco::validate(t->T);
    *out = t.release();
  });
}

void trideco_triset_free(trideco_triset* T) { delete T; }
size_t trideco_triset_n(const trideco_triset* T) { return T ? T->T.n() : 0; }
size_t trideco_triset_degree(const trideco_triset* T, size_t i) {
  return T && i < T->T.n() ? T->T.d[i] : 0;
}
size_t trideco_triset_delta(const trideco_triset* T) { return T ? T->T.delta() : 0; }
uint64_t trideco_triset_prime(const trideco_triset* T) { return T ? T->T.F.p() : 0; }

trideco_status trideco_ring_mul(trideco_context* ctx, const trideco_triset* T, const uint64_t* a,
                                const uint64_t* b, uint64_t* out) {
  return guard(ctx, [&] {
    need(T, "T");
    need(a, "a");
    need(b, "b");
    need(out, "out");
    const std::size_t n = T->T.delta();
    copy_out(T->get_ring().mul(span(a, n), span(b, n)), out);
  });
}

trideco_status trideco_transposed_mul(trideco_context* ctx, const trideco_triset* T,
                                      const uint64_t* a, const uint64_t* l, uint64_t* out) {
  return guard(ctx, [&] {
    need(T, "T");
    need(a, "a");
    need(l, "l");
    need(out, "out");
    const std::size_t n = T->T.delta();
    copy_out(T->get_ring().transposed_mul(span(a, n), span(l, n)), out);
  });
}

trideco_status trideco_trace_form(trideco_context* ctx, const trideco_triset* T, uint64_t* out) {
  return guard(ctx, [&] {
    need(T, "T");
    need(out, "out");
    copy_out(T->T.n() <= 2 ? T->get_ring().trace() : trideco::detail::tower_trace_form(T->T), out);
  });
}

trideco_status trideco_mod_compose(trideco_context* ctx, const trideco_triset* T,
                                   const uint64_t* F, size_t m, const size_t* bounds,
                                   const uint64_t* const* G, uint64_t* out) {
  return guard(ctx, [&] {
    need(T, "T");
    need(F, "F");
    need(bounds, "bounds");
    need(out, "out");
    trideco::DegreeBounds b{{bounds, bounds + m}};
    copy_out(trideco::mod_compose(span(F, b.delta_f()), b, elements(G, m, T->T.delta()),
                                  T->get_ring()),
             out);
  });
}

trideco_status trideco_power_project(trideco_context* ctx, const trideco_triset* T,
                                     const uint64_t* l, size_t m, const size_t* bounds,
                                     const uint64_t* const* G, uint64_t* out) {
  return guard(ctx, [&] {
    need(T, "T");
    need(l, "l");
    need(bounds, "bounds");
    need(out, "out");
    trideco::DegreeBounds b{{bounds, bounds + m}};
    copy_out(trideco::power_project(span(l, T->T.delta()), elements(G, m, T->T.delta()), b,
                                    T->get_ring()),
             out);
  });
}

trideco_status trideco_char_poly(trideco_context* ctx, const trideco_triset* T, const uint64_t* a,
                                 uint64_t* out) {
  return guard(ctx, [&] {
    need(T, "T");
    need(a, "a");
    need(out, "out");
    trideco::Poly c = trideco::char_poly(span(a, T->T.delta()), T->get_ring());
    c.resize(T->T.delta() + 1, 0);
    copy_out(c, out);
  });
}

trideco_status trideco_invert(trideco_context* ctx, const trideco_triset* T, const uint64_t* a,
                              uint64_t* out) {
  return guard(ctx, [&] {
    need(T, "T");
    need(a, "a");
    need(out, "out");
    copy_out(trideco::invert_element(span(a, T->T.delta()), T->get_ring()), out);
  });
}

}  // extern "C"
