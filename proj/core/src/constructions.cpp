#include "dynirr/constructions.hpp"

#include "dynirr/error.hpp"

namespace dynirr {

ArtinSchreierCtx build_artin_schreier(std::uint32_t p, std::int64_t h, bool allow_any_p) {
  const FieldCtx base = FieldCtx::prime(p);
  const FieldElem hp = base.from_int(h);
  if (hp.is_zero()) throw Error(ErrorCode::HIsZero, "h must be nonzero mod p");
  if (base.chi(hp) != -1) {
    throw Error(ErrorCode::HIsSquare, "h=" + std::to_string(hp[0]) + " is a square mod " +
                                          std::to_string(p));
  }
  const bool one_mod_four = p % 4 == 1;
  if (!one_mod_four && !allow_any_p) {
    throw Error(ErrorCode::PNotOneModFour, "p=" + std::to_string(p) + " is not 1 mod 4");
  }

  // X^p - X - h, little-endian.
  std::vector<Coeff> modulus(p + 1, 0);
  modulus[0] = hp[0] == 0 ? 0 : p - hp[0];
  modulus[1] = p - 1;
  modulus[p] = 1;

  ArtinSchreierCtx as;
  as.p = p;
  as.h = hp[0];
  as.outside_hypotheses = !one_mod_four;
  try {
    as.ctx = std::make_shared<const FieldCtx>(p, p, std::move(modulus));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadModulus) {
      throw Error(ErrorCode::ModulusNotIrreducible, e.what());
    }
    throw;
  }
  const FieldCtx& k = *as.ctx;
  as.xi = k.theta();

  const FieldElem h_k = k.from_int(as.h);
  if (k.sub(k.pow(as.xi, p), as.xi) != h_k) {
    throw Error(ErrorCode::ModulusNotIrreducible, "xi^p - xi != h");
  }
  for (std::uint32_t a = 0; a < p; ++a) {
    const FieldElem shifted = k.add(k.from_int(a), as.xi);
    if (k.norm(shifted) != h_k) {
      throw Error(ErrorCode::ModulusNotIrreducible, "norm(a + xi) != h at a=" + std::to_string(a));
    }
    if (k.chi(shifted) != -1) {
      throw Error(ErrorCode::ModulusNotIrreducible, "a + xi is a square at a=" + std::to_string(a));
    }
  }
  return as;
}

MonicQuad conjugate_by_xi(const ArtinSchreierCtx& as, std::uint32_t b, std::uint32_t c) {
  const FieldCtx& k = *as.ctx;
  return MonicQuad{k.add(k.from_int(b), as.xi), k.add(k.from_int(c), as.xi)};
}

DISetInstance theorem1_family(const ArtinSchreierCtx& as) {
  std::vector<MonicQuad> polys;
  polys.reserve(std::size_t{as.p} * as.p);
  for (std::uint32_t b = 0; b < as.p; ++b) {
    for (std::uint32_t c = 0; c < as.p; ++c) polys.push_back(conjugate_by_xi(as, b, c));
  }
  return DISetInstance::make(as.ctx, std::move(polys));
}

PairFamily pair_family(std::shared_ptr<const FieldCtx> ctx) {
  const FieldCtx& k = *ctx;
  if (BigInt(k.q() % 4) != 1) {
    throw Error(ErrorCode::PreconditionFailed, "pair family requires q = 1 mod 4");
  }
  const std::uint64_t q = k.q_u64();
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    FieldElem a = k.from_index(idx);
    const FieldElem a1 = k.add(a, k.one());
    if (k.chi(a) == -1 && k.chi(a1) == -1) {
      std::vector<MonicQuad> polys{MonicQuad{a, a}, MonicQuad{a1, a}};
      return PairFamily{std::move(a), DISetInstance::make(std::move(ctx), std::move(polys))};
    }
  }
  throw Error(ErrorCode::NoAdmissibleA, "no a with a and a+1 both non-squares");
}

SingleFamily single_family(const FieldCtx& k) {
  const std::uint64_t q = k.q_u64();
  const FieldElem two = k.from_int(2);
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    FieldElem b = k.from_index(idx);
    if (k.chi(k.sub(two, b)) == -1 && k.chi(k.add(two, b)) == -1) {
      MonicQuad f{b, k.sub(b, two)};
      return SingleFamily{std::move(b), std::move(f)};
    }
  }
  throw Error(ErrorCode::NoAdmissibleB, "no b with 2-b and 2+b both non-squares");
}

}  // namespace dynirr
