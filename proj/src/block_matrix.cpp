#include "normlab/block_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "normlab/linalg.hpp"

namespace normlab {

BlockMatrix::BlockMatrix(std::vector<int> row_dims, std::vector<int> col_dims,
                         std::vector<ComplexMatrix> blocks)
    : row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)), blocks_(std::move(blocks)) {
  if (row_dims_.empty() || col_dims_.empty()) {
    throw DimensionError("block matrix needs at least one block row and column");
  }
  for (int d : row_dims_)
    if (d < 1) throw DimensionError("block row dimensions must be positive");
  for (int d : col_dims_)
    if (d < 1) throw DimensionError("block column dimensions must be positive");
  if (blocks_.size() != row_dims_.size() * col_dims_.size()) {
    throw DimensionError("block grid has " + std::to_string(blocks_.size()) +
                         " blocks, expected " + std::to_string(row_dims_.size() * col_dims_.size()));
  }
  for (std::size_t i = 0; i < row_dims_.size(); ++i) {
    for (std::size_t j = 0; j < col_dims_.size(); ++j) {
      const ComplexMatrix& b = blocks_[i * col_dims_.size() + j];
      if (b.rows() != row_dims_[i] || b.cols() != col_dims_[j]) {
        throw DimensionError("block (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                             ", expected " + std::to_string(row_dims_[i]) + "x" +
                             std::to_string(col_dims_[j]));
      }
    }
  }
}

ComplexMatrix BlockMatrix::flatten() const {
  const int total_rows = std::accumulate(row_dims_.begin(), row_dims_.end(), 0);
  const int total_cols = std::accumulate(col_dims_.begin(), col_dims_.end(), 0);
  ComplexMatrix out(total_rows, total_cols);
  int row_offset = 0;
  for (int i = 0; i < block_rows(); ++i) {
    int col_offset = 0;
    for (int j = 0; j < block_cols(); ++j) {
      const ComplexMatrix& b = block(i, j);
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out(row_offset + r, col_offset + c) = b(r, c);
      col_offset += col_dims_[static_cast<std::size_t>(j)];
    }
    row_offset += row_dims_[static_cast<std::size_t>(i)];
  }
  return out;
}

BlockMatrix split_blocks(const ComplexMatrix& flat, std::vector<int> row_dims,
                         std::vector<int> col_dims) {
  const int total_rows = std::accumulate(row_dims.begin(), row_dims.end(), 0);
  const int total_cols = std::accumulate(col_dims.begin(), col_dims.end(), 0);
  if (flat.rows() != total_rows || flat.cols() != total_cols) {
    throw DimensionError("split_blocks: dimension lists do not tile the matrix");
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(row_dims.size() * col_dims.size());
  int row_offset = 0;
  for (int rd : row_dims) {
    int col_offset = 0;
    for (int cd : col_dims) {
      ComplexMatrix b(rd, cd);
      for (int r = 0; r < rd; ++r)
        for (int c = 0; c < cd; ++c) b(r, c) = flat(row_offset + r, col_offset + c);
      blocks.push_back(std::move(b));
      col_offset += cd;
    }
    row_offset += rd;
  }
  return BlockMatrix(std::move(row_dims), std::move(col_dims), std::move(blocks));
}

BlockMatrix row_operator(const OperatorFamily& family, const Tolerances& tol) {
  std::vector<ComplexMatrix> roots;
  roots.reserve(static_cast<std::size_t>(family.size()));
  for (const ComplexMatrix& a : family.members()) roots.push_back(psd_sqrt(a, tol));
  return BlockMatrix({family.dim()}, std::vector<int>(static_cast<std::size_t>(family.size()), family.dim()),
                     std::move(roots));
}

BlockMatrix gram_block(const OperatorFamily& family, const Tolerances& tol) {
  const int n = family.size();
  std::vector<ComplexMatrix> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (const ComplexMatrix& a : family.members()) roots.push_back(psd_sqrt(a, tol));
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      blocks.push_back(multiply(roots[static_cast<std::size_t>(j)], roots[static_cast<std::size_t>(k)]));
  const std::vector<int> dims(static_cast<std::size_t>(n), family.dim());
  return BlockMatrix(dims, dims, std::move(blocks));
}

ComplexMatrix entrywise_norm_matrix(const BlockMatrix& b) {
  ComplexMatrix out(b.block_rows(), b.block_cols());
  for (int i = 0; i < b.block_rows(); ++i)
    for (int j = 0; j < b.block_cols(); ++j) out(i, j) = op_norm(b.block(i, j));
  return out;
}

BlockMatrix positive_block(const ComplexMatrix& t, const Tolerances& tol) {
  if (!t.is_square()) {
    throw DimensionError("positive_block: operator must be square");
  }
  const ComplexMatrix abs_t = abs_value(t, tol);
  const ComplexMatrix abs_t_star = abs_value(adjoint(t), tol);
  const int d = t.rows();
  return BlockMatrix({d, d}, {d, d}, {abs_t, adjoint(t), t, abs_t_star});
}

BlockMatrix assemble_P(const OperatorFamily& family, const Tolerances& tol) {
  const int d = family.dim();
  ComplexMatrix sum_abs(d, d);
  ComplexMatrix sum_abs_star(d, d);
  ComplexMatrix sum_t(d, d);
  for (const ComplexMatrix& t : family.members()) {
    sum_abs = sum_abs + abs_value(t, tol);
    sum_abs_star = sum_abs_star + abs_value(adjoint(t), tol);
    sum_t = sum_t + t;
  }
  return BlockMatrix({d, d}, {d, d}, {sum_abs, adjoint(sum_t), sum_t, sum_abs_star});
}

}  // namespace normlab
