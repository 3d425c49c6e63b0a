#pragma once

#include <random>

#include "cxosc/diffop.hpp"
#include "cxosc/params.hpp"
#include "cxosc/poly2.hpp"

namespace cxosc::testing {

/// a = 1, b = 1/4.
inline Params<Exact> default_exact() { return Params<Exact>::from_roots(Exact(1), Exact::ratio(1, 2)); }
inline Params<Float> default_float() { return Params<Float>::from_roots(Float(1.0), Float(0.5)); }

/// Small generators for property tests; a fixed seed keeps runs reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Exact rational() {
    const int den = integer(1, 6);
    return Exact(Exact::ratio(integer(-6, 6), den)) +
           (integer(0, 2) == 0 ? Exact::ratio(integer(-3, 3), den) * Exact::imaginary_unit() : Exact(0));
  }

  /// Positive rational in (0, 2] with small denominators.
  Exact positive_rational() {
    const int den = integer(1, 7);
    return Exact::ratio(integer(1, 2 * den), den);
  }

  Poly2<Exact> poly(int max_degree, int max_terms) {
    Poly2<Exact> p;
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) p.add_term(integer(0, max_degree), integer(0, max_degree), rational());
    return p;
  }

  DiffOp<Exact> op(int max_degree, int max_terms) {
    DiffOp<Exact> a;
    const int n = integer(1, max_terms);
    for (int i = 0; i < n; ++i) {
      a.add_term({integer(0, max_degree), integer(0, max_degree), integer(0, max_degree), integer(0, max_degree)},
                 rational());
    }
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cxosc::testing
