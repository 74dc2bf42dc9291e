#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dynirr/closure.hpp"
#include "dynirr/field.hpp"
#include "dynirr/quad_poly.hpp"

namespace dynirr {

inline constexpr std::uint64_t kMaxEnumerableQ = 4096;

/// All (X - b)^2 + c with -c a non-square, ordered by (b, c); q(q-1)/2 entries.
/// Throws GuardExceeded above q = 4096.
std::vector<MonicQuad> enumerate_irreducible_quads(const FieldCtx& ctx);

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;  // closure_test invocations
  double max_seconds = 300.0;
  unsigned jobs = 1;
};

struct SearchReport {
  std::shared_ptr<const FieldCtx> ctx;
  /// M(q) when complete, otherwise the best size found.
  std::size_t m = 0;
  /// Lexicographically smallest maximum set (by candidate index).
  DISetInstance witness;
  std::uint64_t nodes_explored = 0;
  std::size_t candidates = 0;
  BigInt upper_bound;
  bool complete = false;
  double seconds = 0.0;
};

/// Exhaustive depth-first search for the largest dynamically-irreducible set.
/// Extends a set only with later candidates and prunes as soon as closure_test
/// fails, since supersets of a non-DI set are never DI. An incomplete report
/// (budget hit) carries the best set found as a lower bound.
SearchReport max_di_search(std::shared_ptr<const FieldCtx> ctx, const SearchLimits& limits = {});

}  // namespace dynirr
