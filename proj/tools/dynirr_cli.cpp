// dynirr: command-line driver for dynamically-irreducible sets of monic
// quadratics over finite fields.
//
// Exit codes: 0 dynamically irreducible / success, 2 not DI, 3 search budget
// exhausted, 1 error, 64 usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "dynirr/bounds.hpp"
#include "dynirr/charsum.hpp"
#include "dynirr/closure.hpp"
#include "dynirr/constructions.hpp"
#include "dynirr/error.hpp"
#include "dynirr/oracle.hpp"
#include "dynirr/poly_set_io.hpp"
#include "dynirr/report_json.hpp"
#include "dynirr/search.hpp"

namespace {

using namespace dynirr;
using nlohmann::json;

constexpr int kExitDI = 0;
constexpr int kExitError = 1;
constexpr int kExitNotDI = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedPolySet load(const std::string& path) {
  ParsedPolySet parsed = parse_poly_set(read_file(path));
  for (const auto& d : parsed.diagnostics) std::cerr << "warning: " << d << '\n';
  if (parsed.modulus_defaulted) {
    std::cerr << "note: using default modulus, " << parsed.instance.ctx->header() << '\n';
  }
  return parsed;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_test(const std::string& path, std::size_t oracle_depth, unsigned jobs) {
  const ParsedPolySet parsed = load(path);
  const DISetInstance& inst = parsed.instance;
  const ClosureReport report = closure_test(inst);
  json j = closure_to_json(*inst.ctx, report);
  j["r"] = inst.size();
  j["dropped_duplicates"] = inst.dropped_duplicates.size();
  if (oracle_depth > 0) {
    const OracleResult oracle = brute_force_check(*inst.ctx, inst.polys, oracle_depth, jobs);
    bool agrees = true;
    if (report.is_di()) {
      agrees = oracle.all_irreducible();
    } else if (report.witness->composition_length() <= oracle_depth) {
      agrees = oracle.reducible_chain.has_value() &&
               oracle.reducible_chain->size() <= report.witness->composition_length();
    }
    j["oracle"] = oracle_to_json(oracle);
    j["oracle"]["agrees"] = agrees;
    if (!agrees) {
      print(j);
      std::cerr << "error: closure test and brute-force oracle disagree\n";
      return kExitError;
    }
  }
  print(j);
  return report.is_di() ? kExitDI : kExitNotDI;
}

int cmd_single(const std::string& path) {
  const ParsedPolySet parsed = load(path);
  const DISetInstance& inst = parsed.instance;
  if (inst.size() != 1) {
    throw Error(ErrorCode::PreconditionFailed,
                "single expects exactly one polynomial, got " + std::to_string(inst.size()));
  }
  const ClosureReport report = single_test(*inst.ctx, inst.polys.front());
  print(closure_to_json(*inst.ctx, report));
  return report.is_di() ? kExitDI : kExitNotDI;
}

int cmd_search(std::uint32_t p, std::uint32_t d, const SearchLimits& limits) {
  auto ctx = std::make_shared<const FieldCtx>(FieldCtx::with_default_modulus(p, d));
  const SearchReport report = max_di_search(ctx, limits);
  print(search_to_json(report));
  return report.complete ? kExitDI : kExitIncomplete;
}

// The poly-set file goes to --out (report on stdout) or, without --out, to
// stdout with the report on stderr.
int emit_construction(const DISetInstance& inst, json report, const std::string& out,
                      const std::vector<std::string>& comments) {
  const ClosureReport closure = closure_test(inst);
  report["closure"] = closure_to_json(*inst.ctx, closure);
  report["r"] = inst.size();
  const std::string file = emit_poly_set(inst, comments);
  if (out.empty()) {
    std::cout << file;
    std::cerr << report.dump(2) << '\n';
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << file;
    report["out"] = out;
    print(report);
  }
  return closure.is_di() ? kExitDI : kExitNotDI;
}

int cmd_construct_theorem1(std::uint32_t p, std::int64_t h, bool allow_any_p,
                           const std::string& out) {
  const ArtinSchreierCtx as = build_artin_schreier(p, h, allow_any_p);
  const DISetInstance inst = theorem1_family(as);
  json report;
  report["construction"] = "theorem1";
  report["p"] = as.p;
  report["h"] = as.h;
  report["xi"] = format_element(as.xi);
  report["outside_hypotheses"] = as.outside_hypotheses;
  report["checks"] = {{"xi_p_equals_xi_plus_h", true},
                      {"norm_a_plus_xi_equals_h", true},
                      {"a_plus_xi_non_square", true}};
  std::vector<std::string> comments{
      "f_{b,c}(X) = (X - b - xi)^2 + c + xi for (b, c) in F_p^2, xi = theta",
      "modulus X^p - X - h with h = " + std::to_string(as.h)};
  if (as.outside_hypotheses) comments.emplace_back("p != 1 mod 4: outside the hypotheses, no guarantee");
  return emit_construction(inst, std::move(report), out, comments);
}

int cmd_construct_pair(std::uint32_t p, std::uint32_t d, const std::string& out) {
  auto ctx = std::make_shared<const FieldCtx>(FieldCtx::with_default_modulus(p, d));
  const PairFamily fam = pair_family(ctx);
  json report{{"construction", "pair"}, {"a", format_element(fam.a)}};
  return emit_construction(fam.instance, std::move(report), out,
                           {"(X - a)^2 + a and (X - a - 1)^2 + a, a = " + format_element(fam.a)});
}

int cmd_construct_single(std::uint32_t p, std::uint32_t d, const std::string& out) {
  auto ctx = std::make_shared<const FieldCtx>(FieldCtx::with_default_modulus(p, d));
  const SingleFamily fam = single_family(*ctx);
  json report{{"construction", "single"}, {"b", format_element(fam.b)}};
  report["single_test"] = closure_to_json(*ctx, single_test(*ctx, fam.f));
  return emit_construction(DISetInstance::make(ctx, {fam.f}), std::move(report), out,
                           {"(X - b)^2 + b - 2, b = " + format_element(fam.b)});
}

int cmd_charsum(std::uint32_t p, std::uint32_t e, unsigned jobs) {
  print(charsum_to_json(charsum_find_alpha(p, e, jobs)));
  return kExitDI;
}

MonicQuad random_irreducible(const FieldCtx& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, ctx.q_u64() - 1);
  const FieldElem b = ctx.from_index(pick(rng));
  while (true) {
    FieldElem c = ctx.from_index(pick(rng));
    if (ctx.chi(ctx.neg(c)) == -1) return MonicQuad{b, std::move(c)};
  }
}

int cmd_bench(std::uint32_t p, std::uint32_t d, std::size_t trials, std::uint64_t seed,
              std::size_t oracle_depth) {
  const FieldCtx ctx = FieldCtx::with_default_modulus(p, d);
  const ClosureOptions options{bound_B(ctx)};
  std::mt19937_64 rng(seed);
  std::cout << "q,r,trial,verdict,iterate_size,sq_tests,insertions,rounds,bound_B,closure_us,"
               "oracle_depth,oracle_us,oracle_agrees\n";
  for (std::size_t r : {std::size_t{2}, std::size_t{3}}) {
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<MonicQuad> polys;
      while (polys.size() < r) {
        MonicQuad f = random_irreducible(ctx, rng);
        if (std::find(polys.begin(), polys.end(), f) == polys.end()) polys.push_back(std::move(f));
      }
      const auto t0 = std::chrono::steady_clock::now();
      const ClosureReport report = closure_test(ctx, polys, options);
      const auto t1 = std::chrono::steady_clock::now();
      std::string oracle_us = "";
      std::string agrees = "";
      if (oracle_depth > 0) {
        const std::size_t depth =
            report.is_di() ? oracle_depth
                           : std::min(oracle_depth, report.witness->composition_length());
        const OracleResult oracle = brute_force_check(ctx, polys, depth);
        const auto t2 = std::chrono::steady_clock::now();
        oracle_us = std::to_string(std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count());
        bool ok = report.is_di() ? oracle.all_irreducible() : true;
        if (!report.is_di() && report.witness->composition_length() <= oracle_depth) {
          ok = !oracle.all_irreducible();
        }
        agrees = ok ? "1" : "0";
      }
      std::cout << ctx.q() << ',' << r << ',' << t << ','
                << (report.is_di() ? "DI" : "NotDI") << ',' << report.iterate_set.size() << ','
                << report.stats.sq_tests << ',' << report.stats.insertions << ','
                << report.stats.rounds << ',' << *options.bound << ','
                << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() << ','
                << oracle_depth << ',' << oracle_us << ',' << agrees << '\n';
    }
  }
  return kExitDI;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamically-irreducible sets of monic quadratics over finite fields"};
  app.require_subcommand(1);

  std::string file;
  std::size_t oracle_depth = 0;
  unsigned jobs = 1;
  std::uint32_t p = 0;
  std::uint32_t d = 1;
  std::int64_t h = 0;
  std::uint32_t e = 1;
  bool allow_any_p = false;
  std::string out;
  SearchLimits limits;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::size_t bench_oracle_depth = 3;

  auto* test = app.add_subcommand("test", "Run the closure test on a polynomial-set file");
  test->add_option("file", file, "Polynomial-set file")->required();
  test->add_option("--oracle-depth", oracle_depth, "Cross-check with brute force up to this depth");
  test->add_option("--jobs", jobs, "Worker threads for the oracle");

  auto* single = app.add_subcommand("single", "Run the r = 1 orbit test on a one-polynomial file");
  single->add_option("file", file, "Polynomial-set file")->required();

  auto* search = app.add_subcommand("search-max", "Compute M(q) by exhaustive backtracking");
  search->add_option("--p", p, "Characteristic")->required();
  search->add_option("--d", d, "Extension degree");
  search->add_option("--budget-nodes", limits.max_nodes, "Maximum closure tests");
  search->add_option("--budget-secs", limits.max_seconds, "Maximum seconds");
  search->add_option("--jobs", limits.jobs, "Worker threads");

  auto* construct = app.add_subcommand("construct", "Emit an explicit DI family");
  construct->require_subcommand(1);
  auto* thm1 = construct->add_subcommand("theorem1", "Artin-Schreier family of p^2 polynomials");
  thm1->set_help_flag("--help", "Print this help message and exit");
  thm1->add_option("--p", p, "Prime, 1 mod 4")->required();
  thm1->add_option("--h", h, "Non-square in F_p")->required();
  thm1->add_flag("--allow-any-p", allow_any_p, "Permit p = 3 mod 4 (no guarantee)");
  thm1->add_option("--out", out, "Write the polynomial-set file here");
  auto* pair = construct->add_subcommand("pair", "(X-a)^2+a, (X-a-1)^2+a for q = 1 mod 4");
  pair->add_option("--p", p, "Characteristic")->required();
  pair->add_option("--d", d, "Extension degree");
  pair->add_option("--out", out, "Write the polynomial-set file here");
  auto* single_fam = construct->add_subcommand("single", "(X-b)^2+b-2 with 2-b, 2+b non-squares");
  single_fam->add_option("--p", p, "Characteristic")->required();
  single_fam->add_option("--d", d, "Extension degree");
  single_fam->add_option("--out", out, "Write the polynomial-set file here");

  auto* charsum = app.add_subcommand("charsum", "Character sum S over F_{p^e} and a witness alpha");
  charsum->add_option("--p", p, "Characteristic")->required();
  charsum->add_option("--e", e, "Extension degree")->required();
  charsum->add_option("--jobs", jobs, "Worker threads");

  auto* bench = app.add_subcommand("bench", "Closure statistics on random pairs and triples (CSV)");
  bench->add_option("--p", p, "Characteristic")->required();
  bench->add_option("--d", d, "Extension degree");
  bench->add_option("--trials", trials, "Trials per set size")->required();
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--oracle-depth", bench_oracle_depth, "Brute-force depth, 0 to skip");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*test) return cmd_test(file, oracle_depth, jobs);
    if (*single) return cmd_single(file);
    if (*search) return cmd_search(p, d, limits);
    if (*thm1) return cmd_construct_theorem1(p, h, allow_any_p, out);
    if (*pair) return cmd_construct_pair(p, d, out);
    if (*single_fam) return cmd_construct_single(p, d, out);
    if (*charsum) return cmd_charsum(p, e, jobs);
    if (*bench) return cmd_bench(p, d, trials, seed, bench_oracle_depth);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
