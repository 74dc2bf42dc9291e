// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance_test [path-to-dynirr-cli]

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "dynirr/bounds.hpp"
#include "dynirr/charsum.hpp"
#include "dynirr/closure.hpp"
#include "dynirr/constructions.hpp"
#include "dynirr/dense_poly.hpp"
#include "dynirr/oracle.hpp"
#include "dynirr/poly_set_io.hpp"
#include "dynirr/search.hpp"
#include "test_support.hpp"

using namespace dynirr;
using dynirr::testing::all_elements;
using dynirr::testing::ctx_of;

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

int failures = 0;

// Runs one criterion; a time limit of 0 means untimed.
void criterion(int id, const std::string& name, double limit_s, const std::function<std::string()>& body) {
  const auto t0 = Clock::now();
  std::string detail, error;
  try {
    detail = body();
  } catch (const Failure& f) {
    error = f.what;
  } catch (const std::exception& e) {
    error = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (error.empty() && limit_s > 0 && secs > limit_s) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << limit_s << " s";
    error = os.str();
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s", secs);
  if (error.empty()) {
    std::cout << "PASS [" << id << "] " << name << " (" << timing << ")" << (detail.empty() ? "" : ": ") << detail
              << std::endl;
  } else {
    ++failures;
    std::cout << "FAIL [" << id << "] " << name << " (" << timing << "): " << error << std::endl;
  }
}

MonicQuad quad(const FieldCtx& ctx, std::int64_t b, std::int64_t c) {
  return MonicQuad{ctx.from_int(b), ctx.from_int(c)};
}

std::shared_ptr<const FieldCtx> shared(std::uint32_t p, std::uint32_t d = 1) {
  return std::make_shared<const FieldCtx>(ctx_of(p, d));
}

// Every DI verdict with r >= 2 seen anywhere in the run, checked in criterion 7.
std::uint64_t di_multi_verdicts = 0;
std::uint64_t bound_violations = 0;

ClosureReport tracked_closure(const FieldCtx& ctx, std::span<const MonicQuad> polys) {
  // A huge explicit bound disables the internal postcondition so that the
  // comparison below is made here, independently.
  ClosureOptions opts;
  opts.bound = ctx.q() * ctx.q();
  ClosureReport r = closure_test(ctx, polys, opts);
  if (r.is_di() && polys.size() >= 2) {
    ++di_multi_verdicts;
    if (BigInt(r.iterate_set.size()) > bound_B(ctx)) ++bound_violations;
  }
  return r;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int run_cli(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<SearchReport> completed_searches;

std::string c1_golden() {
  const FieldCtx f5 = FieldCtx::prime(5);
  const std::vector<MonicQuad> t5{quad(f5, 2, 2), quad(f5, 3, 2), quad(f5, 0, 3)};
  require(tracked_closure(f5, t5).is_di(), "F_5 triple not DI");

  const FieldCtx f13 = FieldCtx::prime(13);
  const std::vector<MonicQuad> t13{quad(f13, 1, -2), quad(f13, 9, -6), quad(f13, 3, -5)};
  require(tracked_closure(f13, t13).is_di(), "F_13 triple not DI");

  const FieldCtx f3 = FieldCtx::prime(3);
  const MonicQuad g = quad(f3, 0, 1);
  const ClosureReport s = single_test(f3, g);
  require(s.is_di(), "X^2+1 over F_3 not DI");
  FieldElem v = g.c;
  for (int n = 1; n <= 10; ++n) {
    v = quad_eval(f3, g, v);
    require(v == f3.from_int(2), "f^(n)(1) != 2");
  }
  require(std::ranges::count(s.iterate_set, f3.from_int(2)) == 1, "iterate 2 missing");
  return "F_5 triple DI, F_13 triple DI, X^2+1 over F_3 DI with f^(n)(1) = 2";
}

std::string c2_mq() {
  std::ostringstream os;
  const std::pair<std::uint32_t, std::size_t> expected[] = {{3, 1}, {5, 3}, {7, 2}, {11, 1}};
  for (auto [p, m] : expected) {
    SearchReport r = max_di_search(shared(p));
    require(r.complete, "search incomplete for q=" + std::to_string(p));
    require(r.m == m, "M(" + std::to_string(p) + ") = " + std::to_string(r.m) + ", expected " + std::to_string(m));
    require(tracked_closure(*r.ctx, r.witness.polys).is_di(), "witness not DI");
    os << "M(" << p << ")=" << r.m << " ";
    completed_searches.push_back(std::move(r));
  }
  SearchReport r13 = max_di_search(shared(13));
  require(r13.complete, "search incomplete for q=13");
  require(r13.m >= 3, "M(13) < 3");
  os << "M(13)=" << r13.m << " (complete, " << r13.nodes_explored << " closure calls)";
  completed_searches.push_back(std::move(r13));
  return os.str();
}

std::string check_artin_schreier(std::uint32_t p) {
  const ArtinSchreierCtx as = build_artin_schreier(p, 2);
  const FieldCtx& k = *as.ctx;
  const DISetInstance fam = theorem1_family(as);
  require(fam.size() == std::size_t{p} * p, "family size");
  // Through the file format, as the construct command emits it.
  const DISetInstance back = parse_poly_set(emit_poly_set(fam)).instance;
  require(back.polys == fam.polys, "poly-set round trip");
  const ClosureReport r = tracked_closure(k, back.polys);
  require(r.is_di(), "family not DI");
  require(r.iterate_set.size() <= p, "iterate set larger than p");
  for (const auto& v : r.iterate_set) {
    const FieldElem a = k.sub(v, as.xi);
    require(a[0] < p && std::all_of(a.coeffs().begin() + 1, a.coeffs().end(), [](Coeff c) { return c == 0; }),
            "iterate outside F_p + xi");
  }
  for (std::uint32_t a = 0; a < p; ++a) {
    require(k.norm(k.add(k.from_int(a), as.xi)) == k.from_int(2), "norm(a + xi) != 2");
  }
  return "q=" + k.q().str() + ", " + std::to_string(fam.size()) + " polys DI, |iterates|=" +
         std::to_string(r.iterate_set.size());
}

std::string c3_artin_schreier_small(const std::string& cli) {
  std::string out = check_artin_schreier(5);
  if (!cli.empty()) {
    const auto file = std::filesystem::temp_directory_path() / "dynirr_acceptance_thm1.txt";
    require(run_cli("'" + cli + "' construct theorem1 --p 5 --h 2 --out '" + file.string() + "' > /dev/null") == 0,
            "construct theorem1 failed");
    std::ifstream in(file);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    require(parse_poly_set(text).instance.size() == 25, "construct output does not hold 25 polynomials");
    require(run_cli("'" + cli + "' test '" + file.string() + "' > /dev/null") == 0, "test on construct output != 0");
    std::filesystem::remove(file);
    out += "; CLI construct|test pipeline exit 0";
  }
  return out;
}

std::string c4_charsum() {
  const CharsumReport r = charsum_find_alpha(5, 7);
  const FieldCtx& k = *r.ctx;
  const BigInt q = k.q();
  require(q == 78125, "q");
  require(r.alpha.has_value(), "no alpha found");
  for (std::int64_t a = 0; a < 5; ++a) require(k.chi(k.add(k.from_int(a), *r.alpha)) == -1, "a + alpha is not a non-square");
  require(r.S > 0, "S not positive");
  // S >= q - sqrt(q) * 5 * 31, checked exactly.
  const BigInt K = 5 * 31;
  require(r.S >= q || K * K * q >= (q - r.S) * (q - r.S), "S below the Weil floor");
  std::ostringstream os;
  os << "S=" << r.S << " >= floor " << r.weil_floor << ", alpha=" << format_element(*r.alpha);
  return os.str();
}

std::string c5_oracle() {
  std::uint64_t sets = 0, di = 0, checked_notdi = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const FieldCtx ctx = FieldCtx::prime(p);
    const auto cands = enumerate_irreducible_quads(ctx);
    for (std::size_t k : {2u, 3u}) {
      for_each_subset(cands.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<MonicQuad> polys;
        for (auto i : idx) polys.push_back(cands[i]);
        const ClosureReport r = tracked_closure(ctx, polys);
        const OracleResult o = brute_force_check(ctx, polys, 4);
        ++sets;
        if (r.is_di()) {
          ++di;
          require(o.all_irreducible(), "DI set with a reducible chain over F_" + std::to_string(p));
        } else {
          const std::size_t n = r.witness->composition_length();
          if (n <= 4) {
            ++checked_notdi;
            require(!o.all_irreducible() && o.reducible_chain->size() <= n,
                    "NotDI witness of depth " + std::to_string(n) + " not confirmed over F_" + std::to_string(p));
          }
        }
      });
    }
  }
  return std::to_string(sets) + " sets, " + std::to_string(di) + " DI, " + std::to_string(checked_notdi) +
         " NotDI witnesses confirmed, 0 disagreements";
}

std::string c6_freeness() {
  std::mt19937_64 rng(2024);
  std::uint64_t pairs = 0;
  for (const FieldCtx& ctx :
       {FieldCtx::prime(3), FieldCtx::prime(5), FieldCtx::prime(7), FieldCtx::prime(13), ctx_of(5, 2)}) {
    for (int t = 0; t < 200; ++t) {
      const MonicQuad f1 = dynirr::testing::random_quad(ctx, rng);
      MonicQuad f2 = dynirr::testing::random_quad(ctx, rng);
      while (f2 == f1) f2 = dynirr::testing::random_quad(ctx, rng);
      for (std::size_t n = 1; n <= 5; ++n) require(chains_distinct(ctx, f1, f2, n), "collision in " + ctx.header());
      ++pairs;
    }
    const std::vector<MonicQuad> lhs{quad(ctx, -1, 0), quad(ctx, 0, 0)};
    const std::vector<MonicQuad> rhs{quad(ctx, 0, 0), quad(ctx, 0, 1)};
    require(compose_chain(ctx, lhs) == compose_chain(ctx, rhs), "f1 o f2 != f2 o f3 in " + ctx.header());
  }
  return std::to_string(pairs) + " pairs distinct to depth 5; f1 o f2 = f2 o f3 reproduced";
}

std::string c7_bounds() {
  // Extra DI multi-polynomial verdicts beyond those gathered above.
  for (const FieldCtx& ctx : dynirr::testing::small_fields()) {
    if (ctx.q_u64() % 4 == 1) tracked_closure(ctx, pair_family(std::make_shared<const FieldCtx>(ctx)).instance.polys);
  }
  require(di_multi_verdicts > 0, "no DI verdicts with r >= 2 observed");
  require(bound_violations == 0, std::to_string(bound_violations) + " DI verdicts exceed bound_B");
  for (const auto& r : completed_searches) {
    require(BigInt(r.m) <= r.upper_bound, "M(q) above m_upper_bound for " + r.ctx->header());
  }
  const FieldCtx f13 = FieldCtx::prime(13);
  const auto elems = all_elements(f13);
  std::uint64_t families = 0;
  std::size_t worst = 0;
  for (const auto& u : elems) {
    for (std::size_t k = 1; k <= elems.size(); ++k) {
      if (k > 3 && k < elems.size()) continue;
      for_each_subset(elems.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<MonicQuad> polys;
        for (auto i : idx) polys.push_back(MonicQuad{elems[i], u});
        const GammaReport g = gamma_two_to_one(f13, polys);
        require(g.max_fiber <= 2, "gamma fibre above 2");
        worst = std::max(worst, g.max_fiber);
        ++families;
      });
    }
  }
  return std::to_string(di_multi_verdicts) + " DI verdicts within bound_B; " + std::to_string(completed_searches.size()) +
         " searches within m_upper_bound; " + std::to_string(families) + " common-c families, max fibre " +
         std::to_string(worst);
}

void field_exhaustive(const FieldCtx& k) {
  const auto e = all_elements(k);
  const FieldElem zero = k.zero(), one = k.one();
  const auto squares = dynirr::testing::squares_by_enumeration(k);
  const std::uint64_t q = k.q_u64();
  require(squares.size() == (q + 1) / 2, "square count in " + k.header());
  std::uint64_t nonsquares = 0;
  for (const auto& x : e) {
    require(k.add(x, zero) == x && k.mul(x, one) == x && k.add(x, k.neg(x)) == zero, "identities");
    if (!x.is_zero()) require(k.mul(x, k.inv(x)) == one, "inverse");
    const int c = k.chi(x);
    require(c == (x.is_zero() ? 0 : squares.count(x) ? 1 : -1), "chi vs squares");
    nonsquares += c == -1;
  }
  require(nonsquares == (q - 1) / 2, "non-square count");
  for (const auto& x : e) {
    const FieldElem nx = k.norm(x);
    for (const auto& y : e) {
      const FieldElem xy = k.mul(x, y);
      require(xy == k.mul(y, x) && k.add(x, y) == k.add(y, x), "commutativity");
      require(k.chi(xy) == k.chi(x) * k.chi(y), "chi multiplicativity");
      require(k.norm(xy) == k.mul(nx, k.norm(y)), "norm multiplicativity");
      const FieldElem xpy = k.add(x, y);
      for (const auto& z : e) {
        require(k.mul(xy, z) == k.mul(x, k.mul(y, z)), "mul associativity");
        require(k.add(xpy, z) == k.add(x, k.add(y, z)), "add associativity");
        require(k.mul(xpy, z) == k.add(k.mul(x, z), k.mul(y, z)), "distributivity");
      }
    }
  }
}

std::string c8_field() {
  std::size_t fields = 0;
  for (std::uint32_t p = 3; p <= 169; p += 2) {
    if (!is_prime_u64(p)) continue;
    std::uint64_t q = p;
    for (std::uint32_t d = 1; q <= 169; ++d, q *= p) {
      field_exhaustive(ctx_of(p, d));
      ++fields;
    }
  }
  // Sampled: F_3125 with both the default and the Artin-Schreier modulus.
  std::mt19937_64 rng(8);
  std::uint64_t cases = 0;
  for (const FieldCtx& k : {ctx_of(5, 5), *build_artin_schreier(5, 2).ctx}) {
    const auto squares = dynirr::testing::squares_by_enumeration(k);
    require(squares.size() == 1563, "square count in F_3125");
    for (int t = 0; t < 2000; ++t) {
      const FieldElem x = dynirr::testing::random_element(k, rng);
      const FieldElem y = dynirr::testing::random_element(k, rng);
      const FieldElem z = dynirr::testing::random_element(k, rng);
      require(k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z)), "mul associativity (3125)");
      require(k.add(k.add(x, y), z) == k.add(x, k.add(y, z)), "add associativity (3125)");
      require(k.mul(k.add(x, y), z) == k.add(k.mul(x, z), k.mul(y, z)), "distributivity (3125)");
      require(k.mul(x, y) == k.mul(y, x), "commutativity (3125)");
      if (!x.is_zero()) require(k.mul(x, k.inv(x)) == k.one(), "inverse (3125)");
      require(k.chi(k.mul(x, y)) == k.chi(x) * k.chi(y), "chi multiplicativity (3125)");
      require(k.chi(x) == (x.is_zero() ? 0 : squares.count(x) ? 1 : -1), "chi vs squares (3125)");
      require(k.norm(k.mul(x, y)) == k.mul(k.norm(x), k.norm(y)), "norm multiplicativity (3125)");
      ++cases;
    }
  }
  return std::to_string(fields) + " fields with q <= 169 exhaustive; " + std::to_string(cases) + " sampled cases in F_3125";
}

std::string c9_trend() {
  std::mt19937_64 rng(99);
  std::ostringstream os;
  std::vector<double> ratios;
  for (std::uint32_t e : {2u, 3u, 4u, 5u}) {
    const FieldCtx k = ctx_of(5, e);
    const double lq = std::log(k.q().convert_to<double>());
    const double B = bound_B(k).convert_to<double>();
    double ratio_sum = 0, ratio_max = 0;
    int trials = 0;
    auto run = [&](const std::vector<MonicQuad>& polys) {
      const ClosureReport r = closure_test(k, polys);
      const double ops = static_cast<double>(r.stats.sq_tests + r.stats.insertions);
      const double ratio = ops / (static_cast<double>(polys.size()) * B * lq);
      ratio_sum += ratio;
      ratio_max = std::max(ratio_max, ratio);
      ++trials;
    };
    for (int t = 0; t < 200; ++t) {
      std::vector<MonicQuad> polys;
      while (polys.size() < std::size_t(2 + t % 2)) {
        const MonicQuad f = dynirr::testing::random_quad(k, rng);
        if (quad_is_irreducible(k, f) && std::find(polys.begin(), polys.end(), f) == polys.end()) polys.push_back(f);
      }
      run(polys);
    }
    run(pair_family(std::make_shared<const FieldCtx>(k)).instance.polys);
    // The worst case is what must not outgrow r B ln q.
    ratios.push_back(ratio_max);
    os << "q=" << k.q() << " ops/(r B ln q) max " << ratio_max << " mean " << ratio_sum / trials << "; ";
  }
  for (double r : ratios) require(r <= 4 * ratios.front(), "operation count grows faster than r B ln q: " + os.str());
  return os.str() + "within factor 4";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion(1, "golden verdicts", 1.0, c1_golden);
  criterion(2, "M(q) reproduction", 60.0, c2_mq);
  criterion(3, "Artin-Schreier family, p=5 h=2", 5.0, [&] { return c3_artin_schreier_small(cli); });
  criterion(3, "Artin-Schreier family, p=13 h=2", 60.0, [] { return check_artin_schreier(13); });
  criterion(4, "character-sum alpha at p=5 e=7", 60.0, c4_charsum);
  criterion(5, "closure vs brute-force oracle, q in {3,5,7}", 0, c5_oracle);
  criterion(6, "two-polynomial freeness and three-polynomial collision", 0, c6_freeness);
  criterion(7, "bound compliance", 0, c7_bounds);
  criterion(8, "field-core properties", 0, c8_field);
  criterion(9, "closure operation-count trend over q = 5^2..5^5", 0, c9_trend);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
