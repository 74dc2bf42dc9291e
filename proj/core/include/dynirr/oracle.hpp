#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynirr/field.hpp"
#include "dynirr/quad_poly.hpp"

namespace dynirr {

inline constexpr std::uint64_t kOracleMaxChains = 1'000'000;
inline constexpr std::size_t kOracleMaxDepth = 12;  // degree 4096

struct OracleResult {
  std::size_t max_depth = 0;
  /// Outermost first; absent when every chain up to max_depth is irreducible.
  std::optional<std::vector<std::size_t>> reducible_chain;
  std::uint64_t chains_tested = 0;

  bool all_irreducible() const noexcept { return !reducible_chain.has_value(); }
};

/// Expands every composition of length 1..max_depth and runs the power-gcd
/// irreducibility test on each. Reports the first reducible chain: shortest
/// length, then lexicographically smallest index sequence. Throws
/// GuardExceeded when r^max_depth > 10^6 or max_depth > 12.
OracleResult brute_force_check(const FieldCtx& ctx, std::span<const MonicQuad> polys,
                               std::size_t max_depth, unsigned jobs = 1);

}  // namespace dynirr
