#include "dynirr/bounds.hpp"

#include <algorithm>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dynirr/error.hpp"

namespace dynirr {

namespace {

enum class Form { LogSquaredSqrt, LogFourthLinear };

// floor(value) when value is at least 10^-(Digits/2) away from an integer,
// otherwise nullopt so the caller can retry at higher precision.
template <unsigned Digits>
std::optional<BigInt> exact_floor(const BigInt& q, Form form) {
  using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;
  const Real x(q);
  const Real lq = log(x);
  Real v;
  if (form == Form::LogSquaredSqrt) {
    v = 4 * lq * lq * sqrt(x);
  } else {
    v = 32 * lq * lq * lq * lq * x;
  }
  const Real f = floor(v);
  const Real margin = pow(Real(10), -static_cast<int>(Digits / 2));
  if (v - f < margin || (f + 1) - v < margin) return std::nullopt;
  return f.template convert_to<BigInt>();
}

BigInt floor_of(const BigInt& q, Form form) {
  if (auto v = exact_floor<100>(q, form)) return *v;
  if (auto v = exact_floor<400>(q, form)) return *v;
  if (auto v = exact_floor<1600>(q, form)) return *v;
  throw Error(ErrorCode::InternalBoundExceeded, "floor of bound is ambiguous at 1600 digits");
}

}  // namespace

BigInt bound_B(const BigInt& q) {
  if (q < 3) throw Error(ErrorCode::PreconditionFailed, "bound_B requires q >= 3");
  return std::min(q, floor_of(q, Form::LogSquaredSqrt));
}

BigInt m_upper_bound(const BigInt& q) {
  const BigInt b = bound_B(q);
  return std::min(BigInt(2 * b * b), floor_of(q, Form::LogFourthLinear));
}

}  // namespace dynirr
