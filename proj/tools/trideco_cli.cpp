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

// Command-line front end. Talks to the library only through trideco.h.
//
// Exit codes: 0 success, 2 mathematical error, 3 unreadable or malformed
// input (including bad flags), 1 anything else.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trideco/trideco.h"

namespace {

constexpr int kExitInput = 3;

struct Options {
  std::string in, out, order, target_order, via = "kernel", op = "quasi-inverse", csv;
  uint64_t seed = 0;
  std::size_t max_retries = 64;
  std::vector<std::size_t> n{2}, d{4};
  uint64_t prime = 962592769;
  std::size_t reps = 1;
  std::size_t count = 10;
};

struct CtxDeleter {
  void operator()(trideco_context* c) const { trideco_context_free(c); }
};
struct DocDeleter {
  void operator()(trideco_doc* d) const { trideco_doc_free(d); }
};
using Ctx = std::unique_ptr<trideco_context, CtxDeleter>;
using Doc = std::unique_ptr<trideco_doc, DocDeleter>;

class Failure {
 public:
  Failure(int code, std::string msg) : code(code), msg(std::move(msg)) {}
  int code;
  std::string msg;
};

void check(trideco_context* ctx, trideco_status s) {
  if (s == TRIDECO_OK) return;
  std::string msg = trideco_context_last_error(ctx);
  throw Failure(trideco_status_exit_code(s), msg.empty() ? trideco_status_name(s) : msg);
}

std::string take(char* s) {
  std::string r(s ? s : "");
  trideco_string_free(s);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure(kExitInput, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_out(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Failure(1, "cannot write " + o.out);
  f << text;
}

Doc load(trideco_context* ctx, const Options& o) {
  std::string text = read_file(o.in);
  trideco_doc* d = nullptr;
  check(ctx, trideco_doc_parse(ctx, text.c_str(), &d));
  return Doc(d);
}

std::string print(trideco_context* ctx, const trideco_doc* d) {
  char* s = nullptr;
  check(ctx, trideco_doc_print(ctx, d, &s));
  return take(s);
}

const char* or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

trideco_via via_of(const std::string& v) {
  return v == "decomposition" ? TRIDECO_VIA_DECOMPOSITION : TRIDECO_VIA_KERNEL;
}

int run_bench(trideco_context* ctx, const Options& o) {
  std::ostringstream table, csv;
  csv << "n,d,delta,op,seconds,seed\n";
  char line[160];
  std::snprintf(line, sizeof line, "%4s %6s %10s %-14s %12s %8s\n", "n", "d", "delta", "op",
                "seconds", "seed");
  table << line;
  for (std::size_t n : o.n) {
    for (std::size_t d : o.d) {
      std::vector<double> times;
      std::size_t delta = 0;
      for (std::size_t r = 0; r < std::max<std::size_t>(o.reps, 1); ++r) {
        double t = 0;
        check(ctx, trideco_bench_cell(ctx, o.op.c_str(), n, d, o.prime, o.seed + r, &delta, &t));
        times.push_back(t);
      }
      std::sort(times.begin(), times.end());
      double med = times[times.size() / 2];
      std::snprintf(line, sizeof line, "%4zu %6zu %10zu %-14s %12.6f %8llu\n", n, d, delta,
                    o.op.c_str(), med, static_cast<unsigned long long>(o.seed));
      table << line;
      std::snprintf(line, sizeof line, "%zu,%zu,%zu,%s,%.6f,%llu\n", n, d, delta, o.op.c_str(),
                    med, static_cast<unsigned long long>(o.seed));
      csv << line;
    }
  }
  write_out(o, table.str());
  if (!o.csv.empty()) {
    std::ofstream f(o.csv, std::ios::binary);
    if (!f) throw Failure(1, "cannot write " + o.csv);
    f << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular sets over prime fields"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--max-retries", o.max_retries, "attempts per Las Vegas loop")
      ->capture_default_str();
  app.add_option("--out", o.out, "output file (default stdout)");

  auto with_in = [&](CLI::App* c) {
    c->add_option("--in", o.in, "input file")->required();
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--max-retries", o.max_retries, "attempts per Las Vegas loop");
    c->add_option("--out", o.out, "output file (default stdout)");
    return c;
  };
  CLI::App* dec = with_in(app.add_subcommand("decompose", "equiprojectable decomposition"));
  dec->add_option("--order", o.order, "target order, smallest variable first");
  CLI::App* cho = with_in(app.add_subcommand("change-order", "decompose under another order"));
  cho->add_option("--order", o.order, "source order (must match the file)");
  cho->add_option("--target-order", o.target_order, "target order")->required();
  CLI::App* qi = with_in(app.add_subcommand("quasi-inverse", "split along F = 0 and invert F"));
  qi->add_option("--target-order", o.target_order, "target order");
  const std::vector<std::string> vias{"kernel", "decomposition"};
  CLI::App* mc = with_in(app.add_subcommand("modcomp", "modular composition"));
  mc->add_option("--via", o.via, "kernel or decomposition")->check(CLI::IsMember(vias));
  CLI::App* pp = with_in(app.add_subcommand("powproj", "power projection"));
  pp->add_option("--via", o.via, "kernel or decomposition")->check(CLI::IsMember(vias));
  CLI::App* sc = app.add_subcommand("selfcheck", "compare every module against the oracles");
  sc->add_option("--seed", o.seed, "random seed");
  sc->add_option("--count", o.count, "instances per check")->check(CLI::PositiveNumber);
  CLI::App* bench = app.add_subcommand("bench", "time random instances");
  bench->add_option("--op", o.op, "quasi-inverse, decompose, convert, modcomp or powproj")
      ->check(CLI::IsMember({"quasi-inverse", "decompose", "convert", "modcomp", "powproj"}));
  bench->add_option("--n", o.n, "variable counts")->expected(1, -1)->delimiter(',');
  bench->add_option("--d", o.d, "per-variable degrees")->expected(1, -1)->delimiter(',');
  bench->add_option("--prime", o.prime, "field characteristic")->capture_default_str();
  bench->add_option("--reps", o.reps, "runs per cell (median reported)");
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--csv", o.csv, "CSV output file");
  bench->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  trideco_context* raw = nullptr;
  if (trideco_context_new(o.seed, o.max_retries, &raw) != TRIDECO_OK) {
    std::cerr << "error: cannot create context\n";
    return 1;
  }
  Ctx ctx(raw);
  try {
    if (app.got_subcommand(dec)) {
      Doc in = load(ctx.get(), o);
      trideco_doc* out = nullptr;
      check(ctx.get(), trideco_decompose(ctx.get(), in.get(), or_null(o.order), &out));
      Doc res(out);
      write_out(o, print(ctx.get(), res.get()));
    } else if (app.got_subcommand(cho)) {
      Doc in = load(ctx.get(), o);
      trideco_doc* out = nullptr;
      check(ctx.get(), trideco_change_order(ctx.get(), in.get(), or_null(o.order),
                                            o.target_order.c_str(), &out));
      Doc res(out);
      write_out(o, print(ctx.get(), res.get()));
    } else if (app.got_subcommand(qi)) {
      Doc in = load(ctx.get(), o);
      trideco_doc* out = nullptr;
      check(ctx.get(), trideco_quasi_inverse(ctx.get(), in.get(), or_null(o.target_order), &out));
      Doc res(out);
      write_out(o, print(ctx.get(), res.get()));
    } else if (app.got_subcommand(mc) || app.got_subcommand(pp)) {
      Doc in = load(ctx.get(), o);
      char* s = nullptr;
      if (app.got_subcommand(mc)) {
        check(ctx.get(), trideco_modcomp(ctx.get(), in.get(), via_of(o.via), &s));
      } else {
        check(ctx.get(), trideco_powproj(ctx.get(), in.get(), via_of(o.via), &s));
      }
      write_out(o, take(s) + "\n");
    } else if (app.got_subcommand(sc)) {
      char* s = nullptr;
      int ok = 0;
      check(ctx.get(), trideco_selfcheck(ctx.get(), o.count, &s, &ok));
      write_out(o, take(s));
      return ok ? 0 : 2;
    } else if (app.got_subcommand(bench)) {
      return run_bench(ctx.get(), o);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.msg << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
