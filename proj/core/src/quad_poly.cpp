#include "dynirr/quad_poly.hpp"

#include <algorithm>

#include "dynirr/error.hpp"

namespace dynirr {

FieldElem quad_eval(const FieldCtx& ctx, const MonicQuad& f, const FieldElem& x) {
  return ctx.add(ctx.sqr(ctx.sub(x, f.b)), f.c);
}

bool quad_is_irreducible(const FieldCtx& ctx, const MonicQuad& f) {
  ctx.validate(f.b);
  return ctx.chi(ctx.neg(f.c)) == -1;
}

DensePoly quad_to_dense(const FieldCtx& ctx, const MonicQuad& f) {
  return DensePoly({ctx.add(ctx.sqr(f.b), f.c), ctx.neg(ctx.scale(f.b, 2)), ctx.one()});
}

DensePoly compose_outer(const FieldCtx& ctx, const MonicQuad& f, const DensePoly& inner) {
  const DensePoly shifted = poly_sub(ctx, inner, DensePoly::constant(f.b));
  return poly_add(ctx, poly_mul(ctx, shifted, shifted), DensePoly::constant(f.c));
}

DensePoly compose_chain(const FieldCtx& ctx, std::span<const MonicQuad> chain, std::size_t cap) {
  if (chain.empty()) throw Error(ErrorCode::PreconditionFailed, "empty composition chain");
  if (chain.size() > cap) {
    throw Error(ErrorCode::ChainTooLong, "chain of length " + std::to_string(chain.size()) +
                                             " exceeds cap " + std::to_string(cap));
  }
  DensePoly acc = quad_to_dense(ctx, chain.back());
  for (std::size_t k = chain.size() - 1; k-- > 0;) acc = compose_outer(ctx, chain[k], acc);
  return acc;
}

FieldElem eval_chain(const FieldCtx& ctx, std::span<const MonicQuad> chain, const FieldElem& x) {
  FieldElem v = x;
  for (std::size_t k = chain.size(); k-- > 0;) v = quad_eval(ctx, chain[k], v);
  return v;
}

bool chains_distinct(const FieldCtx& ctx, const MonicQuad& f1, const MonicQuad& f2, std::size_t n,
                     std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "depth must be at least 1");
  if (n > cap) {
    throw Error(ErrorCode::ChainTooLong,
                "depth " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  // Build level by level: every depth-k composition is f ∘ (depth k-1 one).
  std::vector<DensePoly> level{quad_to_dense(ctx, f1), quad_to_dense(ctx, f2)};
  for (std::size_t depth = 2; depth <= n; ++depth) {
    std::vector<DensePoly> next;
    next.reserve(level.size() * 2);
    for (const MonicQuad* f : {&f1, &f2}) {
      for (const auto& inner : level) next.push_back(compose_outer(ctx, *f, inner));
    }
    level = std::move(next);
  }
  auto less = [](const DensePoly& a, const DensePoly& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
  };
  std::sort(level.begin(), level.end(), less);
  return std::adjacent_find(level.begin(), level.end()) == level.end();
}

}  // namespace dynirr
