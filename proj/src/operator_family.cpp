#include "normlab/operator_family.hpp"

#include <stdexcept>
#include <string>

namespace normlab {

OperatorFamily::OperatorFamily(std::vector<ComplexMatrix> members, std::string label)
    : dim_(0), members_(std::move(members)), label_(std::move(label)) {
  if (members_.empty()) {
    throw std::invalid_argument("operator family must contain at least one member");
  }
  const ComplexMatrix& first = members_.front();
  if (!first.is_square()) {
    throw DimensionError("family members must be square, got " + std::to_string(first.rows()) +
                         "x" + std::to_string(first.cols()));
  }
  dim_ = first.rows();
  for (const ComplexMatrix& m : members_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw DimensionError("family members must share dimension " + std::to_string(dim_));
    }
  }
}

OperatorFamily OperatorFamily::permuted(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != size()) {
    throw std::invalid_argument("permutation length does not match family size");
  }
  std::vector<ComplexMatrix> reordered;
  reordered.reserve(members_.size());
  std::vector<bool> seen(members_.size(), false);
  for (int idx : order) {
    if (idx < 0 || idx >= size() || seen[static_cast<std::size_t>(idx)]) {
      throw std::invalid_argument("invalid permutation of family indices");
    }
    seen[static_cast<std::size_t>(idx)] = true;
    reordered.push_back(members_[static_cast<std::size_t>(idx)]);
  }
  return OperatorFamily(std::move(reordered), label_);
}

OperatorFamily OperatorFamily::scaled(Complex factor) const {
  std::vector<ComplexMatrix> scaled_members;
  scaled_members.reserve(members_.size());
  for (const ComplexMatrix& m : members_) scaled_members.push_back(factor * m);
  return OperatorFamily(std::move(scaled_members), label_);
}

ComplexMatrix OperatorFamily::sum() const {
  ComplexMatrix acc = members_.front();
  for (std::size_t k = 1; k < members_.size(); ++k) acc = acc + members_[k];
  return acc;
}

}  // namespace normlab
