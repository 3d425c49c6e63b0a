#pragma once

#include <map>
#include <string>
#include <utility>

#include "cxosc/scalar.hpp"

namespace cxosc {

/// Sparse polynomial in the commuting formal variables z and zbar.
///
/// Terms are keyed by (deg_z, deg_zbar). Zero coefficients are never stored,
/// so two exact polynomials are equal iff their term maps are equal.
template <Scalar F>
class Poly2 {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, F>;

  Poly2() = default;

  static Poly2 constant(const F& c);
  static Poly2 monomial(int deg_z, int deg_zbar, const F& c = from_integer<F>(1));

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  F coeff(int deg_z, int deg_zbar) const;

  /// Accumulates c into the (deg_z, deg_zbar) coefficient, pruning zeros.
  void add_term(int deg_z, int deg_zbar, const F& c);

  int degree() const;
  int degree_zbar() const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const F& c);

  Poly2 d_z() const;
  Poly2 d_zbar() const;
  Poly2 pow(int k) const;

  /// Evaluates at independent values of z and zbar.
  F evaluate(const F& z, const F& zbar) const;

  friend Poly2 operator+(Poly2 lhs, const Poly2& rhs) { return lhs += rhs; }
  friend Poly2 operator-(Poly2 lhs, const Poly2& rhs) { return lhs -= rhs; }
  friend Poly2 operator-(Poly2 p) { return p *= from_integer<F>(-1); }
  friend Poly2 operator*(const F& c, Poly2 p) { return p *= c; }
  friend Poly2 operator*(Poly2 p, const F& c) { return p *= c; }
  friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs) { return multiply(lhs, rhs); }

  friend bool operator==(const Poly2& lhs, const Poly2& rhs)
    requires std::same_as<F, Exact>
  {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  static Poly2 multiply(const Poly2& lhs, const Poly2& rhs);

  Terms terms_;
};

/// Largest coefficient magnitude; zero for the zero polynomial.
template <Scalar F>
Magnitude<F> max_coeff(const Poly2<F>& p);

/// Tolerance comparison: max |p - q| <= tol * max(1, max |p|, max |q|).
template <Scalar F>
bool approx_equal(const Poly2<F>& p, const Poly2<F>& q, double tol);

template <Scalar F>
std::string to_string(const Poly2<F>& p);

Poly2<Float> to_float(const Poly2<Exact>& p);

extern template class Poly2<Exact>;
extern template class Poly2<Float>;

}  // namespace cxosc
