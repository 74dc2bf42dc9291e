#pragma once

#include <span>
#include <vector>

#include "dynirr/dense_poly.hpp"
#include "dynirr/field.hpp"

namespace dynirr {

/// f_{b,c}(X) = (X - b)^2 + c.
struct MonicQuad {
  FieldElem b;
  FieldElem c;

  friend bool operator==(const MonicQuad&, const MonicQuad&) = default;
  /// Canonical order: by b, then by c, both under element order.
  friend auto operator<=>(const MonicQuad&, const MonicQuad&) = default;
};

inline constexpr std::size_t kDefaultChainCap = 12;

FieldElem quad_eval(const FieldCtx& ctx, const MonicQuad& f, const FieldElem& x);

/// f_{b,c} is irreducible over F_q iff -c is a non-square.
bool quad_is_irreducible(const FieldCtx& ctx, const MonicQuad& f);

/// X^2 - 2bX + (b^2 + c).
DensePoly quad_to_dense(const FieldCtx& ctx, const MonicQuad& f);

/// Dense expansion of chain[0] ∘ chain[1] ∘ ... ∘ chain[n-1]; index 0 is the
/// outermost polynomial. Throws ChainTooLong when n exceeds cap, and
/// PreconditionFailed on an empty chain.
DensePoly compose_chain(const FieldCtx& ctx, std::span<const MonicQuad> chain,
                        std::size_t cap = kDefaultChainCap);

/// (inner - b)^2 + c, i.e. f ∘ inner.
DensePoly compose_outer(const FieldCtx& ctx, const MonicQuad& f, const DensePoly& inner);

/// Applies chain to x right-to-left with quad_eval.
FieldElem eval_chain(const FieldCtx& ctx, std::span<const MonicQuad> chain, const FieldElem& x);

/// Whether all 2^n length-n compositions of {f1, f2} are pairwise distinct.
bool chains_distinct(const FieldCtx& ctx, const MonicQuad& f1, const MonicQuad& f2, std::size_t n,
                     std::size_t cap = kDefaultChainCap);

}  // namespace dynirr
