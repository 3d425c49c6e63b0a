#pragma once

#include <compare>
#include <map>
#include <string>

#include "cxosc/poly2.hpp"
#include "cxosc/scalar.hpp"

namespace cxosc {

/// Normally ordered word z^z zbar^zbar d_z^dz d_zbar^dzbar.
struct OpMonomial {
  int z = 0;
  int zbar = 0;
  int dz = 0;
  int dzbar = 0;

  auto operator<=>(const OpMonomial&) const = default;
};

/// Element of the Weyl algebra in z, zbar stored in normal order.
///
/// All multiplication operators sit left of all derivatives; within each
/// group z precedes zbar. Products re-normalize through [d_z, z] = 1 and
/// [d_zbar, zbar] = 1, every other pair of generators commuting. The zero
/// operator has an empty term map.
template <Scalar F>
class DiffOp {
 public:
  using Terms = std::map<OpMonomial, F>;

  DiffOp() = default;

  static DiffOp scalar(const F& c);
  static DiffOp identity() { return scalar(from_integer<F>(1)); }
  static DiffOp term(const OpMonomial& word, const F& c = from_integer<F>(1));
  static DiffOp z() { return term({1, 0, 0, 0}); }
  static DiffOp zbar() { return term({0, 1, 0, 0}); }
  static DiffOp d_z() { return term({0, 0, 1, 0}); }
  static DiffOp d_zbar() { return term({0, 0, 0, 1}); }
  /// Multiplication by a polynomial.
  static DiffOp multiplication(const Poly2<F>& p);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  F coeff(const OpMonomial& word) const;

  void add_term(const OpMonomial& word, const F& c);

  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  DiffOp& operator*=(const F& c);

  friend DiffOp operator+(DiffOp lhs, const DiffOp& rhs) { return lhs += rhs; }
  friend DiffOp operator-(DiffOp lhs, const DiffOp& rhs) { return lhs -= rhs; }
  friend DiffOp operator-(DiffOp op) { return op *= from_integer<F>(-1); }
  friend DiffOp operator*(const F& c, DiffOp op) { return op *= c; }
  friend DiffOp operator*(DiffOp op, const F& c) { return op *= c; }
  /// Composition (lhs after rhs), normally ordered.
  friend DiffOp operator*(const DiffOp& lhs, const DiffOp& rhs) { return compose(lhs, rhs); }

  friend bool operator==(const DiffOp& lhs, const DiffOp& rhs)
    requires std::same_as<F, Exact>
  {
    return lhs.terms_ == rhs.terms_;
  }

  static DiffOp compose(const DiffOp& lhs, const DiffOp& rhs);

 private:
  Terms terms_;
};

template <Scalar F>
DiffOp<F> commutator(const DiffOp<F>& lhs, const DiffOp<F>& rhs);

template <Scalar F>
DiffOp<F> anticommutator(const DiffOp<F>& lhs, const DiffOp<F>& rhs);

/// Formal adjoint for the real-measure pairing: z <-> zbar,
/// d_z -> -d_zbar, d_zbar -> -d_z, coefficients conjugated, order reversed.
template <Scalar F>
DiffOp<F> adjoint(const DiffOp<F>& op);

/// The parity x2 -> -x2: (i, j, k, l) -> (j, i, l, k), coefficients kept.
template <Scalar F>
DiffOp<F> swap_vars(const DiffOp<F>& op);

/// Plain action on a polynomial (no envelope).
template <Scalar F>
Poly2<F> act(const DiffOp<F>& op, const Poly2<F>& p);

template <Scalar F>
Magnitude<F> max_coeff(const DiffOp<F>& op);

/// Tolerance comparison with the same scaling rule as for Poly2.
template <Scalar F>
bool approx_equal(const DiffOp<F>& lhs, const DiffOp<F>& rhs, double tol);

template <Scalar F>
std::string to_string(const DiffOp<F>& op);

DiffOp<Float> to_float(const DiffOp<Exact>& op);

extern template class DiffOp<Exact>;
extern template class DiffOp<Float>;

}  // namespace cxosc
