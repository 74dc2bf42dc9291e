#include "dynirr/dense_poly.hpp"

#include <algorithm>

#include "dynirr/error.hpp"

namespace dynirr {

namespace {

std::vector<long> prime_divisors(long m) {
  std::vector<long> out;
  for (long l = 2; l * l <= m; ++l) {
    if (m % l == 0) {
      out.push_back(l);
      while (m % l == 0) m /= l;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

DensePoly make_monic(const FieldCtx& ctx, const DensePoly& f) {
  if (f.is_zero() || f.leading() == ctx.one()) return f;
  const FieldElem li = ctx.inv(f.leading());
  std::vector<FieldElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(ctx.mul(a, li));
  return DensePoly(std::move(c));
}

}  // namespace

DensePoly::DensePoly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DensePoly DensePoly::constant(const FieldElem& c) { return DensePoly({c}); }

DensePoly DensePoly::monomial(const FieldCtx& ctx, std::size_t k) {
  std::vector<FieldElem> c(k + 1, ctx.zero());
  c[k] = ctx.one();
  return DensePoly(std::move(c));
}

DensePoly poly_add(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElem> out(std::max(x.size(), y.size()), ctx.zero());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < x.size() && k < y.size()) {
      out[k] = ctx.add(x[k], y[k]);
    } else {
      out[k] = k < x.size() ? x[k] : y[k];
    }
  }
  return DensePoly(std::move(out));
}

DensePoly poly_sub(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElem> out(std::max(x.size(), y.size()), ctx.zero());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const FieldElem& u = k < x.size() ? x[k] : out[k];
    out[k] = k < y.size() ? ctx.sub(u, y[k]) : u;
  }
  return DensePoly(std::move(out));
}

DensePoly poly_mul(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElem> out(x.size() + y.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] = ctx.add(out[i + j], ctx.mul(x[i], y[j]));
    }
  }
  return DensePoly(std::move(out));
}

DensePoly poly_mod(const FieldCtx& ctx, const DensePoly& a, const DensePoly& m) {
  if (m.is_zero()) throw Error(ErrorCode::PreconditionFailed, "polynomial division by zero");
  if (a.degree() < m.degree()) return a;
  std::vector<FieldElem> r = a.coeffs();
  const auto& mc = m.coeffs();
  const std::size_t dm = mc.size() - 1;
  const bool monic = mc.back() == ctx.one();
  const FieldElem lead_inv = monic ? ctx.one() : ctx.inv(mc.back());
  for (std::size_t k = r.size(); k-- > dm;) {
    if (r[k].is_zero()) continue;
    const FieldElem factor = monic ? r[k] : ctx.mul(r[k], lead_inv);
    const std::size_t shift = k - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      r[shift + i] = ctx.sub(r[shift + i], ctx.mul(factor, mc[i]));
    }
  }
  r.resize(dm);
  return DensePoly(std::move(r));
}

DensePoly poly_gcd(const FieldCtx& ctx, DensePoly a, DensePoly b) {
  while (!b.is_zero()) {
    DensePoly r = poly_mod(ctx, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(ctx, a);
}

DensePoly poly_mulmod(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b,
                      const DensePoly& m) {
  return poly_mod(ctx, poly_mul(ctx, a, b), m);
}

DensePoly poly_powmod(const FieldCtx& ctx, const DensePoly& base, const BigInt& exponent,
                      const DensePoly& m) {
  if (exponent < 0) throw Error(ErrorCode::PreconditionFailed, "negative exponent");
  DensePoly result = poly_mod(ctx, DensePoly::constant(ctx.one()), m);
  if (exponent == 0) return result;
  const DensePoly b = poly_mod(ctx, base, m);
  const auto top = boost::multiprecision::msb(exponent);
  for (std::size_t bit = top + 1; bit-- > 0;) {
    result = poly_mulmod(ctx, result, result, m);
    if (boost::multiprecision::bit_test(exponent, bit)) result = poly_mulmod(ctx, result, b, m);
  }
  return result;
}

FieldElem poly_eval(const FieldCtx& ctx, const DensePoly& f, const FieldElem& x) {
  FieldElem acc = ctx.zero();
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = ctx.add(ctx.mul(acc, x), f.coeffs()[k]);
  }
  return acc;
}

bool poly_is_irreducible(const FieldCtx& ctx, const DensePoly& f) {
  const long m = f.degree();
  if (m < 1) return false;
  if (m == 1) return true;
  const DensePoly g = make_monic(ctx, f);
  const DensePoly x = DensePoly::monomial(ctx, 1);

  const std::vector<long> primes = prime_divisors(m);
  std::vector<long> needed;
  for (long l : primes) needed.push_back(m / l);

  // frob holds X^{q^k} mod g after k steps.
  DensePoly frob = poly_mod(ctx, x, g);
  for (long k = 1; k <= m; ++k) {
    frob = poly_powmod(ctx, frob, ctx.q(), g);
    if (std::find(needed.begin(), needed.end(), k) != needed.end()) {
      const DensePoly h = poly_gcd(ctx, g, poly_sub(ctx, frob, x));
      if (h.degree() != 0) return false;
    }
  }
  return frob == poly_mod(ctx, x, g);
}

}  // namespace dynirr
