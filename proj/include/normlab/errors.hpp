#pragma once

#include <stdexcept>
#include <string>

namespace normlab {

/// Shape/size preconditions violated (mismatched products, non-square input, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input fails a mathematical domain requirement that is not a shape issue.
class NotHermitianError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix claimed positive semidefinite has an eigenvalue below the allowed floor.
class NotPsdError : public std::domain_error {
 public:
  NotPsdError(const std::string& what, double offending_eigenvalue)
      : std::domain_error(what), offending_eigenvalue_(offending_eigenvalue) {}

  double offending_eigenvalue() const { return offending_eigenvalue_; }

 private:
  double offending_eigenvalue_;
};

}  // namespace normlab
