#include "dynirr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "dynirr/bounds.hpp"
#include "dynirr/error.hpp"

namespace dynirr {

std::vector<MonicQuad> enumerate_irreducible_quads(const FieldCtx& ctx) {
  if (!ctx.q_fits_u64() || ctx.q_u64() > kMaxEnumerableQ) {
    throw Error(ErrorCode::GuardExceeded, "q exceeds 4096 for exhaustive enumeration");
  }
  const std::uint64_t q = ctx.q_u64();
  std::vector<FieldElem> nonsquare_c;
  for (std::uint64_t k = 0; k < q; ++k) {
    FieldElem c = ctx.from_index(k);
    if (ctx.chi(ctx.neg(c)) == -1) nonsquare_c.push_back(std::move(c));
  }
  std::vector<MonicQuad> out;
  out.reserve(q * nonsquare_c.size());
  for (std::uint64_t k = 0; k < q; ++k) {
    const FieldElem b = ctx.from_index(k);
    for (const auto& c : nonsquare_c) out.push_back(MonicQuad{b, c});
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
using IndexSet = std::vector<std::size_t>;

class Searcher {
 public:
  Searcher(const FieldCtx& ctx, std::vector<MonicQuad> cands, const SearchLimits& limits)
      : ctx_(ctx),
        cands_(std::move(cands)),
        limits_(limits),
        options_{bound_B(ctx)},
        start_(Clock::now()) {}

  void run() {
    const std::size_t n = cands_.size();
    single_ok_.assign(n, false);
    for (std::size_t k = 0; k < n && !out_of_budget(); ++k) {
      single_ok_[k] = test({k});
    }
    pair_ok_.assign(n * n, false);
    for (std::size_t i = 0; i < n && !out_of_budget(); ++i) {
      if (!single_ok_[i]) continue;
      for (std::size_t k = i + 1; k < n && !out_of_budget(); ++k) {
        if (single_ok_[k]) pair_ok_[i * n + k] = pair_ok_[k * n + i] = test({i, k});
      }
    }
    if (exhausted_) {
      for (std::size_t k = 0; k < n; ++k) {
        if (single_ok_[k]) {
          best_ = {k};
          break;
        }
      }
      return;
    }

    std::vector<std::size_t> roots;
    for (std::size_t k = 0; k < n; ++k) {
      if (single_ok_[k]) roots.push_back(k);
    }
    const unsigned jobs = std::max(1U, limits_.jobs);
    if (jobs == 1) {
      IndexSet best;
      for (std::size_t pos = 0; pos < roots.size() && !out_of_budget(); ++pos) {
        branch(roots, pos, best);
      }
      best_ = best;
      return;
    }
    // Branch-local bests merged by (size desc, lexicographic asc): identical to
    // the sequential answer.
    std::vector<IndexSet> branch_best(roots.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t pos = next++; pos < roots.size(); pos = next++) {
          if (out_of_budget()) return;
          branch(roots, pos, branch_best[pos]);
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& b : branch_best) {
      if (b.size() > best_.size()) best_ = b;
    }
  }

  const IndexSet& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_.load(); }
  bool exhausted() const { return exhausted_.load(); }
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  bool test(const IndexSet& set) {
    ++nodes_;
    std::vector<MonicQuad> polys;
    polys.reserve(set.size());
    for (std::size_t k : set) polys.push_back(cands_[k]);
    return closure_test(ctx_, polys, options_).is_di();
  }

  bool out_of_budget() {
    if (exhausted_) return true;
    if (nodes_.load() >= limits_.max_nodes || elapsed() > limits_.max_seconds) exhausted_ = true;
    return exhausted_;
  }

  bool compatible(std::size_t i, std::size_t k) const { return pair_ok_[i * cands_.size() + k]; }

  void branch(const std::vector<std::size_t>& roots, std::size_t pos, IndexSet& best) {
    const std::size_t root = roots[pos];
    IndexSet set{root};
    if (best.size() < 1) best = set;
    std::vector<std::size_t> compat;
    for (std::size_t k = pos + 1; k < roots.size(); ++k) {
      if (compatible(root, roots[k])) compat.push_back(roots[k]);
    }
    extend(set, compat, best);
  }

  // compat: later candidates DI together with every member of set, in order.
  void extend(IndexSet& set, const std::vector<std::size_t>& compat, IndexSet& best) {
    for (std::size_t pos = 0; pos < compat.size(); ++pos) {
      if (set.size() + (compat.size() - pos) <= best.size()) return;
      if (out_of_budget()) return;
      const std::size_t k = compat[pos];
      set.push_back(k);
      // Pairs were settled up front.
      const bool di = set.size() == 2 || test(set);
      if (di) {
        if (set.size() > best.size()) best = set;
        std::vector<std::size_t> sub;
        for (std::size_t t = pos + 1; t < compat.size(); ++t) {
          if (compatible(k, compat[t])) sub.push_back(compat[t]);
        }
        extend(set, sub, best);
      }
      set.pop_back();
    }
  }

  const FieldCtx& ctx_;
  std::vector<MonicQuad> cands_;
  SearchLimits limits_;
  ClosureOptions options_;
  Clock::time_point start_;
  std::vector<bool> single_ok_;
  std::vector<bool> pair_ok_;
  IndexSet best_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace

SearchReport max_di_search(std::shared_ptr<const FieldCtx> ctx, const SearchLimits& limits) {
  std::vector<MonicQuad> cands = enumerate_irreducible_quads(*ctx);
  SearchReport report;
  report.ctx = ctx;
  report.candidates = cands.size();
  report.upper_bound = m_upper_bound(*ctx);

  Searcher searcher(*ctx, cands, limits);
  searcher.run();

  std::vector<MonicQuad> witness;
  for (std::size_t k : searcher.best()) witness.push_back(cands[k]);
  report.m = witness.size();
  report.witness = DISetInstance::make(ctx, std::move(witness));
  report.nodes_explored = searcher.nodes();
  report.complete = !searcher.exhausted();
  report.seconds = searcher.elapsed();
  return report;
}

}  // namespace dynirr
