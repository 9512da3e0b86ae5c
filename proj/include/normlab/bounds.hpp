#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normlab/complex_matrix.hpp"
#include "normlab/operator_family.hpp"
#include "normlab/tolerances.hpp"

namespace normlab {

/// One pass/fail verdict with the compared values as witness data.
/// passed == (lhs <= rhs + slack_used) for inequality checks and
/// == (|lhs - rhs| <= slack_used) for equality checks.
struct VerificationResult {
  std::string check_name;
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack_used = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::string> witness;  // serialized inputs, set on failure
};

/// The full inequality chain for one family. All bounds except the factors
/// are on the squared scale of ||sum T_k||^2. slacks holds the signed gap
/// (upper minus lower) of each adjacent chain step in order
/// lhs_sq -> absolute_value -> refined -> improved -> cotlar_stein.
struct BoundReport {
  double lhs_norm;
  double lhs_sq;
  double absolute_value;
  double refined;
  double improved;
  double cotlar_stein;
  double schur_factor_a;  // max row sum of a_matrix
  double schur_factor_b;  // max row sum of b_matrix
  ComplexMatrix a_matrix;  // a_jk = sqrt(||T_j T_k*||)
  ComplexMatrix b_matrix;  // b_jk = sqrt(||T_j* T_k||)
  bool chain_ok;
  std::vector<double> slacks;
};

/// sqrt((max row abs sum) * (max col abs sum)); an upper bound for op_norm(m).
double schur_test_bound(const ComplexMatrix& m);

/// The pairwise product-norm matrices (a_jk) and (b_jk), real symmetric with
/// nonnegative entries, returned as {a, b}.
std::pair<ComplexMatrix, ComplexMatrix> ab_matrices(const OperatorFamily& family);

/// (max_j sum_k sqrt(||T_j* T_k||)) * (max_j sum_k sqrt(||T_j T_k*||)),
/// an upper bound for ||sum T_k||^2.
double cotlar_stein_bound(const OperatorFamily& family);

/// ||(a_jk)|| * ||(b_jk)||, the sharper bound for ||sum T_k||^2.
double improved_bound(const OperatorFamily& family);

/// ||( |||T_j|^{1/2} |T_k|^{1/2}|| )|| * ||( |||T_j*|^{1/2} |T_k*|^{1/2}|| )||,
/// smaller than improved_bound but built from half powers.
double refined_bound(const OperatorFamily& family, const Tolerances& tol = {});

/// ||sum |T_k||| * ||sum |T_k*|||, an upper bound for ||sum T_k||^2.
double absolute_value_bound(const OperatorFamily& family, const Tolerances& tol = {});

/// ||( ||A_j A_k||^{1/2} )|| for a PSD family; bounds ||sum A_k|| (unsquared).
double positive_sum_bound(const OperatorFamily& family, const Tolerances& tol = {});

/// ||A^{1/2} B^{1/2}|| <= ||A B||^{1/2} for PSD A, B.
VerificationResult half_power_inequality_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                               const Tolerances& tol = {});

/// || |T| |S| || == ||T S*|| (equality check).
VerificationResult abs_norm_identity_check(const ComplexMatrix& t, const ComplexMatrix& s,
                                           const Tolerances& tol = {});

/// |<sum T_k x, y>|^2 <= <sum |T_k| x, x> <sum |T_k*| y, y>.
VerificationResult mixed_schwarz_check(const OperatorFamily& family, const ComplexVector& x,
                                       const ComplexVector& y, const Tolerances& tol = {});

/// Every bound of the chain for one family, with per-step slacks and the
/// chain verdict.
BoundReport full_report(const OperatorFamily& family, const Tolerances& tol = {});

}  // namespace normlab
