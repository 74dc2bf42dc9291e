#pragma once

#include "dynirr/field.hpp"

namespace dynirr {

/// min(q, floor(4 (ln q)^2 sqrt(q))): the size cap on the iterate set of a
/// dynamically-irreducible set with r >= 2.
BigInt bound_B(const BigInt& q);
inline BigInt bound_B(const FieldCtx& ctx) { return bound_B(ctx.q()); }

/// min(2 B^2, floor(32 (ln q)^4 q)): upper bound on M(q).
BigInt m_upper_bound(const BigInt& q);
inline BigInt m_upper_bound(const FieldCtx& ctx) { return m_upper_bound(ctx.q()); }

}  // namespace dynirr
