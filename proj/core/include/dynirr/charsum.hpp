#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "dynirr/field.hpp"

namespace dynirr {

inline constexpr std::uint64_t kCharsumMaxQ = 10'000'000;

struct CharsumReport {
  std::shared_ptr<const FieldCtx> ctx;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  BigInt S;
  /// q - sqrt(q) p (2^p - 1), the character-sum lower bound on S.
  double weil_floor = 0.0;
  /// Smallest α in element order with a + α a non-square for every a in F_p.
  std::optional<FieldElem> alpha;
  std::uint64_t admissible_count = 0;
};

/// S = Σ_{α ∈ F_q} Π_{a ∈ F_p} (1 - χ(a + α)) by direct enumeration over
/// F_{p^e} (default modulus). Throws GuardExceeded for q > 10^7, and
/// InternalBoundExceeded if S falls below the Weil floor.
CharsumReport charsum_find_alpha(std::uint32_t p, std::uint32_t e, unsigned jobs = 1);

}  // namespace dynirr
