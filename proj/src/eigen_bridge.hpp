#pragma once

// Internal Eigen interop; kept out of the public headers.

#include <Eigen/Dense>

#include "normlab/complex_matrix.hpp"

namespace normlab {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = m(i, j);
  return out;
}

}  // namespace normlab
