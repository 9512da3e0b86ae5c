#pragma once

#include <vector>

#include "normlab/complex_matrix.hpp"
#include "normlab/operator_family.hpp"
#include "normlab/tolerances.hpp"

namespace normlab {

/// Operator matrix: a grid of ComplexMatrix blocks with consistent per-row
/// and per-column dimensions. Ragged grids are a construction error.
class BlockMatrix {
 public:
  BlockMatrix(std::vector<int> row_dims, std::vector<int> col_dims,
              std::vector<ComplexMatrix> blocks /* row-major grid */);

  int block_rows() const { return static_cast<int>(row_dims_.size()); }
  int block_cols() const { return static_cast<int>(col_dims_.size()); }
  const std::vector<int>& row_dims() const { return row_dims_; }
  const std::vector<int>& col_dims() const { return col_dims_; }

  const ComplexMatrix& block(int i, int j) const {
    return blocks_[static_cast<std::size_t>(i) * col_dims_.size() + j];
  }

  /// The (sum row_dims) x (sum col_dims) matrix this grid represents.
  ComplexMatrix flatten() const;

 private:
  std::vector<int> row_dims_;
  std::vector<int> col_dims_;
  std::vector<ComplexMatrix> blocks_;
};

/// Slice a flat matrix back into a block grid with the given dimensions.
BlockMatrix split_blocks(const ComplexMatrix& flat, std::vector<int> row_dims,
                         std::vector<int> col_dims);

/// Row operator [A_1^{1/2} A_2^{1/2} ... A_n^{1/2}] of a PSD family.
BlockMatrix row_operator(const OperatorFamily& family, const Tolerances& tol = {});

/// n x n grid with (j,k) block A_j^{1/2} A_k^{1/2}; equals R* R for the row
/// operator R.
BlockMatrix gram_block(const OperatorFamily& family, const Tolerances& tol = {});

/// Scalar matrix of block norms, N[j][k] = op_norm(block(j,k)), returned with
/// zero imaginary parts so there is one matrix type across the codebase.
ComplexMatrix entrywise_norm_matrix(const BlockMatrix& b);

/// The PSD 2x2 operator matrix [[|T|, T*], [T, |T*|]].
BlockMatrix positive_block(const ComplexMatrix& t, const Tolerances& tol = {});

/// Sum of positive_block over the family:
/// [[sum |T_k|, sum T_k*], [sum T_k, sum |T_k*|]].
BlockMatrix assemble_P(const OperatorFamily& family, const Tolerances& tol = {});

}  // namespace normlab
