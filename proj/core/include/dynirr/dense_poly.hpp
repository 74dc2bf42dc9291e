#pragma once

#include <vector>

#include "dynirr/field.hpp"

namespace dynirr {

/// Univariate polynomial over F_q, little-endian, no trailing zeros. The zero
/// polynomial has no coefficients.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<FieldElem> coeffs);

  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const FieldElem& leading() const { return coeffs_.back(); }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

  static DensePoly constant(const FieldElem& c);
  /// X^k.
  static DensePoly monomial(const FieldCtx& ctx, std::size_t k);

 private:
  void trim();
  std::vector<FieldElem> coeffs_;
};

DensePoly poly_add(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b);
DensePoly poly_sub(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b);
DensePoly poly_mul(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b);
/// Remainder of a modulo a nonzero m.
DensePoly poly_mod(const FieldCtx& ctx, const DensePoly& a, const DensePoly& m);
/// Monic gcd; gcd(0, 0) is 0.
DensePoly poly_gcd(const FieldCtx& ctx, DensePoly a, DensePoly b);
DensePoly poly_mulmod(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b,
                      const DensePoly& m);
DensePoly poly_powmod(const FieldCtx& ctx, const DensePoly& base, const BigInt& exponent,
                      const DensePoly& m);
FieldElem poly_eval(const FieldCtx& ctx, const DensePoly& f, const FieldElem& x);

/// Power-gcd irreducibility test for a polynomial of degree m >= 1:
/// X^{q^m} = X mod F and gcd(X^{q^{m/l}} - X, F) = 1 for every prime l | m.
/// Non-monic input is normalized first.
bool poly_is_irreducible(const FieldCtx& ctx, const DensePoly& f);

}  // namespace dynirr
