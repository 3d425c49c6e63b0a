#include "cxosc/scalar.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace cxosc {

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational literal: " + s);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  mpq_class value;
  value.set_str(s, 10);
  if (sgn(value.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  value.canonicalize();
  return {value, 0};
}

GaussRational GaussRational::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return {mpq_class(num, den), 0};
}

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  mpq_class norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
  mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

mpq_class magnitude(const Exact& x) {
  mpq_class re = abs(x.re());
  mpq_class im = abs(x.im());
  return re > im ? re : im;
}

double magnitude(const Float& x) { return std::max(std::abs(x.real()), std::abs(x.imag())); }

Float to_float(const Exact& x) { return {x.re().get_d(), x.im().get_d()}; }

std::string to_string(const mpq_class& x) { return x.get_str(); }

std::string to_string(const Exact& x) {
  if (x.is_real()) return x.re().get_str();
  if (sgn(x.re()) == 0) return x.im().get_str() + "i";
  std::string im = x.im().get_str();
  if (im[0] != '-') im = "+" + im;
  return x.re().get_str() + im + "i";
}

std::string to_string(double x) { return fmt::format("{:.17g}", x); }

std::string to_string(const Float& x) {
  if (x.imag() == 0.0) return to_string(x.real());
  return fmt::format("{:.17g}{:+.17g}i", x.real(), x.imag());
}

bool is_rational_square(const Exact& x) {
  if (!x.is_real() || sgn(x.re()) < 0) return false;
  return mpz_perfect_square_p(x.re().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(x.re().get_den_mpz_t()) != 0;
}

Exact rational_sqrt(const Exact& x) {
  if (!is_rational_square(x)) throw std::domain_error("not a rational square: " + to_string(x));
  mpz_class num = sqrt(x.re().get_num());
  mpz_class den = sqrt(x.re().get_den());
  return {mpq_class(num, den), 0};
}

}  // namespace cxosc
