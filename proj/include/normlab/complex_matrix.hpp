#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "normlab/errors.hpp"

namespace normlab {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix with row-major storage and value semantics; the
/// finite-dimensional stand-in for a bounded operator. Dimensions are
/// positive and entries are validated finite on construction from data.
class ComplexMatrix {
 public:
  ComplexMatrix(int rows, int cols);  // zero-filled
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  const Complex& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  /// Row-major entries.
  const std::vector<Complex>& entries() const { return entries_; }

  /// True when every entry is finite (no NaN/Inf in either component).
  bool all_finite() const;

 private:
  int rows_;
  int cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);
ComplexMatrix operator*(double scale, const ComplexMatrix& m);

/// Standard matrix product; throws DimensionError unless a.cols == b.rows.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b);
}

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Largest entrywise modulus of the difference; 0 for equal shapes/values.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product; throws DimensionError unless x.size() == a.cols.
ComplexVector apply(const ComplexMatrix& a, const ComplexVector& x);

/// <u, v> = sum_i u_i * conj(v_i), linear in the first argument.
Complex inner(const ComplexVector& u, const ComplexVector& v);

/// Euclidean norm.
double vector_norm(const ComplexVector& x);

}  // namespace normlab
