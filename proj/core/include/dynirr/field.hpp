#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dynirr {

using BigInt = boost::multiprecision::cpp_int;
using Coeff = std::uint32_t;

/// An element a_0 + a_1 θ + ... + a_{d-1} θ^{d-1} of F_{p^d}, stored
/// little-endian. Values are only meaningful relative to a FieldCtx, which
/// validates length and range on every public operation.
class FieldElem {
 public:
  FieldElem() = default;
  explicit FieldElem(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Coeff operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const noexcept;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  /// Lexicographic on (a_{d-1}, ..., a_1, a_0), most significant first.
  friend std::strong_ordering operator<=>(const FieldElem& x, const FieldElem& y) noexcept;

 private:
  friend class FieldCtx;
  std::vector<Coeff> coeffs_;
};

/// The finite field F_p[X]/(modulus) for an odd prime p. Immutable after
/// construction; all arithmetic lives here.
class FieldCtx {
 public:
  /// Validates p (odd prime below 2^31), d >= 1 and the modulus (monic,
  /// degree d, irreducible over F_p). Throws Error{InvalidField|BadModulus}.
  FieldCtx(std::uint32_t p, std::uint32_t d, std::vector<Coeff> modulus);

  /// F_p with the modulus X.
  static FieldCtx prime(std::uint32_t p);
  /// F_{p^d} built on find_modulus(p, d).
  static FieldCtx with_default_modulus(std::uint32_t p, std::uint32_t d);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t d() const noexcept { return d_; }
  const std::vector<Coeff>& modulus() const noexcept { return modulus_; }
  const BigInt& q() const noexcept { return q_; }
  /// q as a machine word; throws GuardExceeded when it does not fit.
  std::uint64_t q_u64() const;
  bool q_fits_u64() const noexcept;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.p_ == b.p_ && a.d_ == b.d_ && a.modulus_ == b.modulus_;
  }

  // Construction and validation.
  FieldElem zero() const;
  FieldElem one() const;
  /// The image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t v) const;
  /// Validated construction from little-endian coefficients.
  FieldElem element(std::vector<Coeff> coeffs) const;
  /// The element whose coefficients are the base-p digits of index;
  /// index order coincides with cmp() order.
  FieldElem from_index(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElem& x) const;
  /// The residue class of X.
  FieldElem theta() const;

  bool is_valid(const FieldElem& x) const noexcept;
  void validate(const FieldElem& x) const;

  // Arithmetic. All inputs are validated.
  FieldElem add(const FieldElem& x, const FieldElem& y) const;
  FieldElem sub(const FieldElem& x, const FieldElem& y) const;
  FieldElem neg(const FieldElem& x) const;
  FieldElem mul(const FieldElem& x, const FieldElem& y) const;
  FieldElem sqr(const FieldElem& x) const { return mul(x, x); }
  FieldElem inv(const FieldElem& x) const;
  FieldElem pow(const FieldElem& x, const BigInt& exponent) const;
  FieldElem scale(const FieldElem& x, Coeff k) const;

  /// Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
  int chi(const FieldElem& x) const;
  /// N_{F_q/F_p}(x) = x^{(q-1)/(p-1)}, an element of the prime subfield.
  FieldElem norm(const FieldElem& x) const;
  std::strong_ordering cmp(const FieldElem& x, const FieldElem& y) const;

  /// "p=<p> d=<d>" with " modulus=<c0>:...:<cd>" appended when d > 1.
  std::string header() const;

 private:
  struct Unchecked {};
  FieldCtx(Unchecked, std::uint32_t p, std::uint32_t d, std::vector<Coeff> modulus);

  FieldElem mul_unchecked(const FieldElem& x, const FieldElem& y) const;
  FieldElem pow_unchecked(const FieldElem& x, const BigInt& exponent) const;

  std::uint32_t p_;
  std::uint32_t d_;
  std::vector<Coeff> modulus_;
  BigInt q_;
  BigInt chi_exponent_;
  BigInt norm_exponent_;
};

/// The smallest monic irreducible of degree d over F_p, scanning the
/// non-leading coefficients in element order. d = 1 yields X.
std::vector<Coeff> find_modulus(std::uint32_t p, std::uint32_t d);

bool is_prime_u64(std::uint64_t n) noexcept;

/// Canonical text form "c0:c1:...:c_{d-1}".
std::string format_element(const FieldElem& x);
FieldElem parse_element(const FieldCtx& ctx, std::string_view text);
std::string format_coeffs(std::span<const Coeff> coeffs);

}  // namespace dynirr
