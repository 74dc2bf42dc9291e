#include "dynirr/closure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dynirr/bounds.hpp"
#include "dynirr/error.hpp"

namespace dynirr {

DISetInstance DISetInstance::make(std::shared_ptr<const FieldCtx> ctx,
                                  std::vector<MonicQuad> polys) {
  DISetInstance inst;
  inst.ctx = std::move(ctx);
  std::set<MonicQuad> seen;
  for (auto& f : polys) {
    if (!inst.ctx->is_valid(f.b) || !inst.ctx->is_valid(f.c)) {
      throw Error(ErrorCode::MixedFields, "polynomial b=" + format_element(f.b) +
                                              " c=" + format_element(f.c) + " is not over " +
                                              inst.ctx->header());
    }
    if (seen.insert(f).second) {
      inst.polys.push_back(std::move(f));
    } else {
      inst.dropped_duplicates.push_back(std::move(f));
    }
  }
  return inst;
}

std::vector<std::size_t> Witness::reducible_composition() const {
  if (reason == WitnessReason::ReducibleGenerator) return {index};
  std::vector<std::size_t> out = chain;
  out.push_back(index);
  return out;
}

namespace {

constexpr std::size_t kNoPoly = static_cast<std::size_t>(-1);

struct Origin {
  const FieldElem* parent;  // key of the value this one was computed from
  std::size_t poly;         // kNoPoly for a starting value c_j
  std::size_t start;        // j of the root c_j
};

using Tree = std::map<FieldElem, Origin>;

void check_fields(const FieldCtx& ctx, std::span<const MonicQuad> polys) {
  for (const auto& f : polys) {
    if (!ctx.is_valid(f.b) || !ctx.is_valid(f.c)) {
      throw Error(ErrorCode::MixedFields, "polynomial not over " + ctx.header());
    }
  }
}

std::optional<ClosureReport> reducible_generator(const FieldCtx& ctx,
                                                 std::span<const MonicQuad> polys,
                                                 ClosureStats& stats) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    ++stats.sq_tests;
    if (!quad_is_irreducible(ctx, polys[i])) {
      ClosureReport report;
      report.verdict = Verdict::NotDI;
      report.witness = Witness{WitnessReason::ReducibleGenerator, i, {}, ctx.neg(polys[i].c)};
      report.stats = stats;
      return report;
    }
  }
  return std::nullopt;
}

std::vector<FieldElem> keys_of(const Tree& tree) {
  std::vector<FieldElem> out;
  out.reserve(tree.size());
  for (const auto& [k, _] : tree) out.push_back(k);
  return out;
}

}  // namespace

ClosureReport closure_test(const FieldCtx& ctx, std::span<const MonicQuad> polys,
                           const ClosureOptions& options) {
  check_fields(ctx, polys);
  if (polys.empty()) throw Error(ErrorCode::PreconditionFailed, "empty polynomial set");
  const std::size_t r = polys.size();

  ClosureStats stats;
  if (auto bad = reducible_generator(ctx, polys, stats)) return *bad;

  const BigInt q = ctx.q();
  Tree tree;

  // Step 1: the starting values c_1..c_r, duplicates discarded.
  for (std::size_t j = 0; j < r; ++j) {
    if (tree.try_emplace(polys[j].c, Origin{nullptr, kNoPoly, j}).second) ++stats.insertions;
  }
  // Step 2: the first frontier is the whole tree, already sorted.
  std::vector<const FieldElem*> frontier;
  for (const auto& [k, _] : tree) frontier.push_back(&k);

  // Step 3-5.
  while (true) {
    ++stats.rounds;
    if (BigInt(stats.rounds) > q + 1) {
      throw Error(ErrorCode::InternalBoundExceeded, "closure exceeded q rounds");
    }
    std::vector<const FieldElem*> next;
    for (std::size_t i = 0; i < r; ++i) {
      for (const FieldElem* t : frontier) {
        FieldElem v = quad_eval(ctx, polys[i], *t);
        ++stats.sq_tests;
        if (ctx.chi(v) != -1) {
          Witness w{WitnessReason::SquareIterate, 0, {i}, std::move(v)};
          for (const FieldElem* cur = t;;) {
            const Origin& o = tree.at(*cur);
            if (o.poly == kNoPoly) {
              w.index = o.start;
              break;
            }
            w.chain.push_back(o.poly);
            cur = o.parent;
          }
          ClosureReport report;
          report.verdict = Verdict::NotDI;
          report.iterate_set = keys_of(tree);
          report.witness = std::move(w);
          report.stats = stats;
          return report;
        }
        const std::size_t start = tree.at(*t).start;
        auto [it, inserted] = tree.try_emplace(std::move(v), Origin{t, i, start});
        if (inserted) {
          ++stats.insertions;
          next.push_back(&it->first);
        }
      }
    }
    if (BigInt(stats.insertions) > q) {
      throw Error(ErrorCode::InternalBoundExceeded, "closure inserted more than q values");
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const FieldElem* a, const FieldElem* b) { return *a < *b; });
    frontier = std::move(next);
  }

  ClosureReport report;
  report.verdict = Verdict::DynamicallyIrreducible;
  report.iterate_set = keys_of(tree);
  report.stats = stats;
  if (r >= 2) {
    const BigInt bound = options.bound ? *options.bound : bound_B(ctx);
    if (BigInt(report.iterate_set.size()) > bound) {
      throw Error(ErrorCode::InternalBoundExceeded,
                  "iterate set of size " + std::to_string(report.iterate_set.size()) +
                      " exceeds bound_B");
    }
  }
  return report;
}

ClosureReport closure_test(const DISetInstance& inst, const ClosureOptions& options) {
  return closure_test(*inst.ctx, inst.polys, options);
}

ClosureReport single_test(const FieldCtx& ctx, const MonicQuad& f) {
  const std::span<const MonicQuad> one(&f, 1);
  check_fields(ctx, one);
  ClosureStats stats;
  stats.repetition_scale = std::pow(ctx.q().convert_to<double>(), 0.75);
  if (auto bad = reducible_generator(ctx, one, stats)) return *bad;

  std::set<FieldElem> visited{f.c};
  stats.insertions = 1;
  FieldElem t = f.c;
  std::size_t steps = 0;
  while (true) {
    FieldElem v = quad_eval(ctx, f, t);
    ++steps;
    ++stats.sq_tests;
    ++stats.rounds;
    if (ctx.chi(v) != -1) {
      ClosureReport report;
      report.verdict = Verdict::NotDI;
      report.iterate_set.assign(visited.begin(), visited.end());
      report.witness =
          Witness{WitnessReason::SquareIterate, 0, std::vector<std::size_t>(steps, 0), std::move(v)};
      report.stats = stats;
      return report;
    }
    if (!visited.insert(v).second) break;
    ++stats.insertions;
    if (BigInt(stats.insertions) > ctx.q()) {
      throw Error(ErrorCode::InternalBoundExceeded, "orbit longer than q");
    }
    t = std::move(v);
  }
  ClosureReport report;
  report.verdict = Verdict::DynamicallyIrreducible;
  report.iterate_set.assign(visited.begin(), visited.end());
  report.stats = stats;
  return report;
}

FieldElem replay_witness(const FieldCtx& ctx, std::span<const MonicQuad> polys,
                         const Witness& witness) {
  if (witness.reason == WitnessReason::ReducibleGenerator) return ctx.neg(polys[witness.index].c);
  auto poly = [&](std::size_t k) -> const MonicQuad& {
    if (k >= polys.size()) throw Error(ErrorCode::PreconditionFailed, "witness index out of range");
    return polys[k];
  };
  FieldElem v = poly(witness.index).c;
  for (std::size_t k = witness.chain.size(); k-- > 0;) v = quad_eval(ctx, poly(witness.chain[k]), v);
  return v;
}

GammaReport gamma_two_to_one(const FieldCtx& ctx, std::span<const MonicQuad> polys) {
  check_fields(ctx, polys);
  if (polys.empty()) throw Error(ErrorCode::PreconditionFailed, "empty polynomial set");
  const FieldElem& u = polys.front().c;
  std::set<MonicQuad> distinct;
  for (const auto& f : polys) {
    if (f.c != u) throw Error(ErrorCode::CommonCViolated, "c-values differ");
    if (!distinct.insert(f).second) {
      throw Error(ErrorCode::PreconditionFailed, "repeated polynomial");
    }
  }
  std::map<FieldElem, std::size_t> fibres;
  for (const auto& f : polys) ++fibres[quad_eval(ctx, f, u)];
  GammaReport report{u, polys.size(), fibres.size(), 0};
  for (const auto& [_, n] : fibres) report.max_fiber = std::max(report.max_fiber, n);
  return report;
}

}  // namespace dynirr
