#pragma once

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cxosc {

enum class Mode { exact, floating };

std::string_view to_string(Mode mode);

/// Gaussian rational re + i*im with arbitrary-precision rational parts.
///
/// Arithmetic is closed and exact; this is the coefficient field of the
/// exact mode. Both parts are kept canonical (mpq_class::canonicalize).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long value) : re_(value), im_(0) {}  // NOLINT(implicit)
  GaussRational(mpq_class re, mpq_class im = 0);

  /// Parses "p/q", "p" (optionally signed). Throws std::invalid_argument.
  static GaussRational parse(std::string_view text);
  static GaussRational ratio(long num, long den);
  static GaussRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational& operator+=(const GaussRational& rhs);
  GaussRational& operator-=(const GaussRational& rhs);
  GaussRational& operator*=(const GaussRational& rhs);
  /// Throws std::domain_error on division by zero.
  GaussRational& operator/=(const GaussRational& rhs);

  friend GaussRational operator+(GaussRational lhs, const GaussRational& rhs) { return lhs += rhs; }
  friend GaussRational operator-(GaussRational lhs, const GaussRational& rhs) { return lhs -= rhs; }
  friend GaussRational operator*(GaussRational lhs, const GaussRational& rhs) { return lhs *= rhs; }
  friend GaussRational operator/(GaussRational lhs, const GaussRational& rhs) { return lhs /= rhs; }
  friend GaussRational operator-(const GaussRational& x) { return {mpq_class(-x.re_), mpq_class(-x.im_)}; }

  friend bool operator==(const GaussRational& lhs, const GaussRational& rhs) {
    return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Exact = GaussRational;
using Float = std::complex<double>;

template <class F>
concept Scalar = std::same_as<F, Exact> || std::same_as<F, Float>;

template <Scalar F>
constexpr Mode mode_of() {
  return std::same_as<F, Exact> ? Mode::exact : Mode::floating;
}

/// Magnitude type used for residuals: exact rationals or doubles.
template <Scalar F>
using Magnitude = std::conditional_t<std::same_as<F, Exact>, mpq_class, double>;

// Field helpers overloaded on both coefficient types.

inline bool is_zero(const Exact& x) { return x.is_zero(); }
/// Bitwise zero only; used for pruning, never for float equality.
inline bool is_zero(const Float& x) { return x == Float{}; }

inline Exact conj(const Exact& x) { return {x.re(), mpq_class(-x.im())}; }
inline Float conj(const Float& x) { return std::conj(x); }

/// Max of |re| and |im|: the per-coefficient residual measure.
mpq_class magnitude(const Exact& x);
double magnitude(const Float& x);

Float to_float(const Exact& x);
inline Float to_float(const Float& x) { return x; }

std::string to_string(const Exact& x);
std::string to_string(const Float& x);
std::string to_string(const mpq_class& x);
std::string to_string(double x);

template <Scalar F>
F from_integer(long value) {
  return F(static_cast<double>(value));
}
template <>
inline Exact from_integer<Exact>(long value) {
  return Exact(value);
}

template <Scalar F>
F from_ratio(long num, long den) {
  return F(static_cast<double>(num) / static_cast<double>(den));
}
template <>
inline Exact from_ratio<Exact>(long num, long den) {
  return Exact::ratio(num, den);
}

/// x^k for k >= 0.
template <Scalar F>
F power(const F& x, int k) {
  F result = from_integer<F>(1);
  for (int i = 0; i < k; ++i) result *= x;
  return result;
}

/// True when x is a nonnegative real whose square root is rational.
bool is_rational_square(const Exact& x);
/// Rational square root; requires is_rational_square(x).
Exact rational_sqrt(const Exact& x);

}  // namespace cxosc
