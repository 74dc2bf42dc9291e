#pragma once

#include <random>
#include <set>
#include <vector>

#include "dynirr/field.hpp"
#include "dynirr/quad_poly.hpp"

namespace dynirr::testing {

inline std::vector<FieldElem> all_elements(const FieldCtx& ctx) {
  std::vector<FieldElem> out;
  const std::uint64_t q = ctx.q_u64();
  out.reserve(q);
  for (std::uint64_t k = 0; k < q; ++k) out.push_back(ctx.from_index(k));
  return out;
}

inline FieldElem random_element(const FieldCtx& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> digit(0, ctx.p() - 1);
  std::vector<Coeff> c(ctx.d());
  for (auto& v : c) v = digit(rng);
  return ctx.element(std::move(c));
}

inline FieldElem random_nonzero(const FieldCtx& ctx, std::mt19937_64& rng) {
  while (true) {
    FieldElem x = random_element(ctx, rng);
    if (!x.is_zero()) return x;
  }
}

inline MonicQuad random_quad(const FieldCtx& ctx, std::mt19937_64& rng) {
  return MonicQuad{random_element(ctx, rng), random_element(ctx, rng)};
}

/// Squares by exhaustive squaring; independent of chi.
inline std::set<FieldElem> squares_by_enumeration(const FieldCtx& ctx) {
  std::set<FieldElem> out;
  for (const auto& y : all_elements(ctx)) out.insert(ctx.mul(y, y));
  return out;
}

/// Small fields used across suites: every odd prime power up to 169 that
/// needs at most a degree-3 modulus, plus a few larger ones.
inline std::vector<FieldCtx> small_fields() {
  return {FieldCtx::prime(3),   FieldCtx::prime(5),   FieldCtx::prime(7),
          FieldCtx::with_default_modulus(3, 2),       FieldCtx::prime(11),
          FieldCtx::prime(13),  FieldCtx::with_default_modulus(5, 2),
          FieldCtx::with_default_modulus(3, 3),       FieldCtx::with_default_modulus(7, 2),
          FieldCtx::with_default_modulus(3, 4),       FieldCtx::with_default_modulus(11, 2),
          FieldCtx::with_default_modulus(5, 3),       FieldCtx::with_default_modulus(13, 2)};
}

inline FieldCtx ctx_of(std::uint32_t p, std::uint32_t d) { return FieldCtx::with_default_modulus(p, d); }

}  // namespace dynirr::testing
