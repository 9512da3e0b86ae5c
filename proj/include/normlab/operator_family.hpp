#pragma once

#include <string>
#include <vector>

#include "normlab/complex_matrix.hpp"

namespace normlab {

/// Ordered family T_1, ..., T_n of square matrices sharing one dimension.
/// Empty families are rejected at construction.
class OperatorFamily {
 public:
  explicit OperatorFamily(std::vector<ComplexMatrix> members, std::string label = "");

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(members_.size()); }
  const ComplexMatrix& member(int k) const { return members_[static_cast<std::size_t>(k)]; }
  const std::vector<ComplexMatrix>& members() const { return members_; }
  const std::string& label() const { return label_; }

  /// Same members in a different order (0-based permutation of indices).
  OperatorFamily permuted(const std::vector<int>& order) const;

  /// Every member multiplied by the same scalar.
  OperatorFamily scaled(Complex factor) const;

  /// Sum of all members.
  ComplexMatrix sum() const;

 private:
  int dim_;
  std::vector<ComplexMatrix> members_;
  std::string label_;
};

}  // namespace normlab
