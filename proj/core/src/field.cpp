#include "dynirr/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "dynirr/dense_poly.hpp"
#include "dynirr/error.hpp"

namespace dynirr {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k * k <= n; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

bool FieldElem::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

std::strong_ordering operator<=>(const FieldElem& x, const FieldElem& y) noexcept {
  if (x.coeffs_.size() != y.coeffs_.size()) return x.coeffs_.size() <=> y.coeffs_.size();
  for (std::size_t k = x.coeffs_.size(); k-- > 0;) {
    if (x.coeffs_[k] != y.coeffs_[k]) return x.coeffs_[k] <=> y.coeffs_[k];
  }
  return std::strong_ordering::equal;
}

FieldCtx::FieldCtx(Unchecked, std::uint32_t p, std::uint32_t d, std::vector<Coeff> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
  q_ = boost::multiprecision::pow(BigInt(p_), d_);
  chi_exponent_ = (q_ - 1) / 2;
  norm_exponent_ = (q_ - 1) / (p_ - 1);
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t d, std::vector<Coeff> modulus)
    : FieldCtx(Unchecked{}, p, d, std::move(modulus)) {
  if (p_ >= kMaxPrime || !is_prime_u64(p_)) {
    throw Error(ErrorCode::InvalidField, "p=" + std::to_string(p_) + " is not a prime below 2^31");
  }
  if (p_ == 2) throw Error(ErrorCode::InvalidField, "characteristic 2 is not supported");
  if (d_ < 1) throw Error(ErrorCode::InvalidField, "degree must be at least 1");
  if (modulus_.size() != d_ + 1) {
    throw Error(ErrorCode::BadModulus, "modulus must have d+1 coefficients");
  }
  if (modulus_.back() != 1) throw Error(ErrorCode::BadModulus, "modulus must be monic");
  for (Coeff c : modulus_) {
    if (c >= p_) throw Error(ErrorCode::BadModulus, "modulus coefficient out of range");
  }
  if (d_ > 1) {
    const FieldCtx base = prime(p_);
    std::vector<FieldElem> coeffs;
    coeffs.reserve(modulus_.size());
    for (Coeff c : modulus_) coeffs.push_back(base.from_int(c));
    if (!poly_is_irreducible(base, DensePoly(std::move(coeffs)))) {
      throw Error(ErrorCode::BadModulus, "modulus " + format_coeffs(modulus_) + " is reducible");
    }
  }
}

FieldCtx FieldCtx::prime(std::uint32_t p) {
  if (p >= kMaxPrime || !is_prime_u64(p) || p == 2) {
    throw Error(ErrorCode::InvalidField, "p=" + std::to_string(p) + " is not an odd prime below 2^31");
  }
  return FieldCtx(Unchecked{}, p, 1, {0, 1});
}

FieldCtx FieldCtx::with_default_modulus(std::uint32_t p, std::uint32_t d) {
  if (d == 1) return prime(p);
  return FieldCtx(p, d, find_modulus(p, d));
}

bool FieldCtx::q_fits_u64() const noexcept {
  return q_ <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t FieldCtx::q_u64() const {
  if (!q_fits_u64()) throw Error(ErrorCode::GuardExceeded, "q does not fit in 64 bits");
  return q_.convert_to<std::uint64_t>();
}

FieldElem FieldCtx::zero() const { return FieldElem(std::vector<Coeff>(d_, 0)); }

FieldElem FieldCtx::one() const {
  std::vector<Coeff> c(d_, 0);
  c[0] = 1;
  return FieldElem(std::move(c));
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  std::vector<Coeff> c(d_, 0);
  c[0] = static_cast<Coeff>(r);
  return FieldElem(std::move(c));
}

FieldElem FieldCtx::element(std::vector<Coeff> coeffs) const {
  FieldElem x(std::move(coeffs));
  validate(x);
  return x;
}

FieldElem FieldCtx::from_index(std::uint64_t index) const {
  std::vector<Coeff> c(d_, 0);
  for (std::uint32_t k = 0; k < d_; ++k) {
    c[k] = static_cast<Coeff>(index % p_);
    index /= p_;
  }
  if (index != 0) throw Error(ErrorCode::ElementFromWrongField, "index exceeds q");
  return FieldElem(std::move(c));
}

std::uint64_t FieldCtx::index_of(const FieldElem& x) const {
  validate(x);
  (void)q_u64();
  std::uint64_t index = 0;
  for (std::size_t k = d_; k-- > 0;) index = index * p_ + x[k];
  return index;
}

FieldElem FieldCtx::theta() const {
  if (d_ == 1) return zero();
  std::vector<Coeff> c(d_, 0);
  c[1] = 1;
  return FieldElem(std::move(c));
}

bool FieldCtx::is_valid(const FieldElem& x) const noexcept {
  if (x.size() != d_) return false;
  return std::all_of(x.coeffs_.begin(), x.coeffs_.end(), [this](Coeff c) { return c < p_; });
}

void FieldCtx::validate(const FieldElem& x) const {
  if (!is_valid(x)) {
    throw Error(ErrorCode::ElementFromWrongField,
                "element " + format_element(x) + " does not belong to " + header());
  }
}

FieldElem FieldCtx::add(const FieldElem& x, const FieldElem& y) const {
  validate(x);
  validate(y);
  FieldElem r = x;
  for (std::uint32_t k = 0; k < d_; ++k) {
    Coeff s = r.coeffs_[k] + y.coeffs_[k];
    r.coeffs_[k] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& x, const FieldElem& y) const {
  validate(x);
  validate(y);
  FieldElem r = x;
  for (std::uint32_t k = 0; k < d_; ++k) {
    r.coeffs_[k] = r.coeffs_[k] >= y.coeffs_[k] ? r.coeffs_[k] - y.coeffs_[k]
                                                : r.coeffs_[k] + p_ - y.coeffs_[k];
  }
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& x) const {
  validate(x);
  FieldElem r = x;
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : p_ - c;
  return r;
}

FieldElem FieldCtx::scale(const FieldElem& x, Coeff k) const {
  validate(x);
  FieldElem r = x;
  const std::uint64_t kk = k % p_;
  for (auto& c : r.coeffs_) c = static_cast<Coeff>(c * kk % p_);
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& x, const FieldElem& y) const {
  validate(x);
  validate(y);
  return mul_unchecked(x, y);
}

FieldElem FieldCtx::mul_unchecked(const FieldElem& x, const FieldElem& y) const {
  const std::uint64_t p = p_;
  if (d_ == 1) {
    return FieldElem({static_cast<Coeff>(std::uint64_t{x.coeffs_[0]} * y.coeffs_[0] % p)});
  }
  std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    const std::uint64_t a = x.coeffs_[i];
    if (a == 0) continue;
    for (std::uint32_t j = 0; j < d_; ++j) {
      prod[i + j] = (prod[i + j] + a * y.coeffs_[j]) % p;
    }
  }
  // Reduce with the monic modulus: θ^d = -(m_0 + ... + m_{d-1} θ^{d-1}).
  for (std::size_t k = prod.size(); k-- > d_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    const std::uint64_t minus_c = p - c;
    const std::size_t base = k - d_;
    for (std::uint32_t i = 0; i < d_; ++i) {
      prod[base + i] = (prod[base + i] + minus_c * modulus_[i]) % p;
    }
    prod[k] = 0;
  }
  std::vector<Coeff> out(d_);
  for (std::uint32_t k = 0; k < d_; ++k) out[k] = static_cast<Coeff>(prod[k]);
  return FieldElem(std::move(out));
}

FieldElem FieldCtx::pow(const FieldElem& x, const BigInt& exponent) const {
  validate(x);
  if (exponent < 0) throw Error(ErrorCode::PreconditionFailed, "negative exponent");
  return pow_unchecked(x, exponent);
}

FieldElem FieldCtx::pow_unchecked(const FieldElem& x, const BigInt& exponent) const {
  if (d_ == 1 && exponent <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return FieldElem(
        {static_cast<Coeff>(powmod_u64(x.coeffs_[0], exponent.convert_to<std::uint64_t>(), p_))});
  }
  FieldElem result = one();
  if (exponent == 0) return result;
  const auto top = boost::multiprecision::msb(exponent);
  for (std::size_t bit = top + 1; bit-- > 0;) {
    result = mul_unchecked(result, result);
    if (boost::multiprecision::bit_test(exponent, bit)) result = mul_unchecked(result, x);
  }
  return result;
}

FieldElem FieldCtx::inv(const FieldElem& x) const {
  validate(x);
  if (x.is_zero()) throw Error(ErrorCode::InversionOfZero, "cannot invert zero");
  return pow_unchecked(x, q_ - 2);
}

int FieldCtx::chi(const FieldElem& x) const {
  validate(x);
  if (x.is_zero()) return 0;
  const FieldElem r = pow_unchecked(x, chi_exponent_);
  return r == one() ? 1 : -1;
}

FieldElem FieldCtx::norm(const FieldElem& x) const {
  validate(x);
  return pow_unchecked(x, norm_exponent_);
}

std::strong_ordering FieldCtx::cmp(const FieldElem& x, const FieldElem& y) const {
  validate(x);
  validate(y);
  return x <=> y;
}

std::string FieldCtx::header() const {
  std::string h = "p=" + std::to_string(p_) + " d=" + std::to_string(d_);
  if (d_ > 1) h += " modulus=" + format_coeffs(modulus_);
  return h;
}

std::vector<Coeff> find_modulus(std::uint32_t p, std::uint32_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidField, "degree must be at least 1");
  const FieldCtx base = FieldCtx::prime(p);
  if (d == 1) return {0, 1};
  // The non-leading coefficients act as a base-p counter, most significant
  // coefficient changing slowest, so candidates appear in element order.
  std::vector<Coeff> tail(d, 0);
  while (true) {
    std::vector<FieldElem> coeffs;
    coeffs.reserve(d + 1);
    for (Coeff c : tail) coeffs.push_back(base.from_int(c));
    coeffs.push_back(base.one());
    if (poly_is_irreducible(base, DensePoly(std::move(coeffs)))) {
      std::vector<Coeff> modulus = tail;
      modulus.push_back(1);
      return modulus;
    }
    std::size_t k = 0;
    while (k < d && ++tail[k] == p) tail[k++] = 0;
    if (k == d) break;
  }
  throw Error(ErrorCode::BadModulus, "no irreducible polynomial found");
}

std::string format_coeffs(std::span<const Coeff> coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out += ':';
    out += std::to_string(coeffs[k]);
  }
  return out;
}

std::string format_element(const FieldElem& x) { return format_coeffs(x.coeffs()); }

FieldElem parse_element(const FieldCtx& ctx, std::string_view text) {
  std::vector<Coeff> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(':', pos), text.size());
    const std::string_view tok = text.substr(pos, end - pos);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "malformed element '" + std::string(text) + "'");
    }
    if (v >= ctx.p()) {
      throw Error(ErrorCode::CoefficientOutOfRange,
                  "coefficient " + std::string(tok) + " not in [0, " + std::to_string(ctx.p()) + ")");
    }
    coeffs.push_back(static_cast<Coeff>(v));
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (coeffs.size() != ctx.d()) {
    throw Error(ErrorCode::ParseError, "element '" + std::string(text) + "' must have " +
                                           std::to_string(ctx.d()) + " coefficients");
  }
  return FieldElem(std::move(coeffs));
}

}  // namespace dynirr
