#include "dynirr/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dynirr/dense_poly.hpp"
#include "dynirr/error.hpp"

namespace dynirr {

namespace {

std::vector<std::size_t> decode_chain(std::size_t index, std::size_t r, std::size_t depth) {
  std::vector<std::size_t> chain(depth);
  for (std::size_t k = depth; k-- > 0;) {
    chain[k] = index % r;
    index /= r;
  }
  return chain;
}

// Smallest index in level whose polynomial is reducible, or level.size().
std::size_t first_reducible(const FieldCtx& ctx, const std::vector<DensePoly>& level,
                            unsigned jobs) {
  if (jobs <= 1 || level.size() < 2) {
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (!poly_is_irreducible(ctx, level[k])) return k;
    }
    return level.size();
  }
  // Workers take interleaved indices and lower the shared minimum, so the
  // answer is the same as the sequential scan.
  std::atomic<std::size_t> best{level.size()};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t k = w; k < level.size(); k += jobs) {
        if (k >= best.load()) return;
        if (!poly_is_irreducible(ctx, level[k])) {
          std::size_t cur = best.load();
          while (k < cur && !best.compare_exchange_weak(cur, k)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  return best.load();
}

}  // namespace

OracleResult brute_force_check(const FieldCtx& ctx, std::span<const MonicQuad> polys,
                               std::size_t max_depth, unsigned jobs) {
  const std::size_t r = polys.size();
  if (r == 0) throw Error(ErrorCode::PreconditionFailed, "empty polynomial set");
  if (max_depth == 0) throw Error(ErrorCode::PreconditionFailed, "depth must be at least 1");
  if (max_depth > kOracleMaxDepth) {
    throw Error(ErrorCode::GuardExceeded, "depth " + std::to_string(max_depth) + " exceeds 12");
  }
  BigInt total = 1;
  for (std::size_t k = 0; k < max_depth; ++k) total *= r;
  if (total > kOracleMaxChains) {
    throw Error(ErrorCode::GuardExceeded, "r^n exceeds 10^6 chains");
  }

  OracleResult result;
  result.max_depth = max_depth;
  std::vector<DensePoly> level;
  for (const auto& f : polys) level.push_back(quad_to_dense(ctx, f));

  for (std::size_t depth = 1;; ++depth) {
    const std::size_t hit = first_reducible(ctx, level, jobs);
    result.chains_tested += std::min(hit + 1, level.size());
    if (hit < level.size()) {
      result.reducible_chain = decode_chain(hit, r, depth);
      return result;
    }
    if (depth == max_depth) return result;
    // Chain (i, s) sits at index i * r^{depth} + index(s): lexicographic order.
    std::vector<DensePoly> next;
    next.reserve(level.size() * r);
    for (const auto& f : polys) {
      for (const auto& inner : level) next.push_back(compose_outer(ctx, f, inner));
    }
    level = std::move(next);
  }
}

}  // namespace dynirr
