#pragma once

#include <cstdint>
#include <memory>

#include "dynirr/closure.hpp"
#include "dynirr/field.hpp"
#include "dynirr/quad_poly.hpp"

namespace dynirr {

/// F_{p^p} = F_p[X]/(X^p - X - h) together with the root ξ = θ.
struct ArtinSchreierCtx {
  std::uint32_t p = 0;
  std::uint32_t h = 0;
  std::shared_ptr<const FieldCtx> ctx;
  FieldElem xi;
  /// True when built with p ≢ 1 (mod 4); such families carry no guarantee.
  bool outside_hypotheses = false;
};

/// Builds and re-verifies the Artin-Schreier field: irreducible modulus,
/// ξ^p = ξ + h, N(a + ξ) = h and χ(a + ξ) = -1 for all a in F_p.
/// Throws HIsZero, HIsSquare, PNotOneModFour (unless allow_any_p),
/// ModulusNotIrreducible, or InvalidField for a bad p.
ArtinSchreierCtx build_artin_schreier(std::uint32_t p, std::int64_t h, bool allow_any_p = false);

/// All p^2 polynomials (X - b - ξ)^2 + c + ξ for (b, c) in F_p^2, ordered by
/// (b, c).
DISetInstance theorem1_family(const ArtinSchreierCtx& as);

/// The conjugated form of g_{b,c}(X) = (X - b)^2 + c by ℓ(X) = X + ξ.
MonicQuad conjugate_by_xi(const ArtinSchreierCtx& as, std::uint32_t b, std::uint32_t c);

struct PairFamily {
  FieldElem a;
  DISetInstance instance;  // (X - a)^2 + a, (X - a - 1)^2 + a
};

/// First a (element order) with a and a + 1 both non-squares.
/// Requires q ≡ 1 (mod 4); throws PreconditionFailed or NoAdmissibleA.
PairFamily pair_family(std::shared_ptr<const FieldCtx> ctx);

struct SingleFamily {
  FieldElem b;
  MonicQuad f;  // (X - b)^2 + b - 2
};

/// First b (element order) with 2 - b and 2 + b both non-squares.
SingleFamily single_family(const FieldCtx& ctx);

}  // namespace dynirr
