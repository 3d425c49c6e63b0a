#pragma once

#include <string>
#include <vector>

#include "cxosc/scalar.hpp"

namespace cxosc {

/// Small dense row-major matrix over a coefficient field.
template <Scalar F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_integer<F>(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs)
    requires std::same_as<F, Exact>
  {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Largest entrywise magnitude of lhs - rhs; shapes must agree.
template <Scalar F>
Magnitude<F> max_deviation(const Matrix<F>& lhs, const Matrix<F>& rhs) {
  Magnitude<F> best{0};
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      Magnitude<F> m = magnitude(F(lhs(r, c) - rhs(r, c)));
      if (m > best) best = m;
    }
  }
  return best;
}

/// Rows as "[a, b, c]" lines.
template <Scalar F>
std::string to_string(const Matrix<F>& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += to_string(m(r, c));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace cxosc
