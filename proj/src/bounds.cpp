#include "normlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "normlab/linalg.hpp"

namespace normlab {

namespace {

double max_abs_row_sum(const ComplexMatrix& m) {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < m.cols(); ++j) sum += std::abs(m(i, j));
    worst = std::max(worst, sum);
  }
  return worst;
}

double max_abs_col_sum(const ComplexMatrix& m) {
  double worst = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    for (int i = 0; i < m.rows(); ++i) sum += std::abs(m(i, j));
    worst = std::max(worst, sum);
  }
  return worst;
}

/// Symmetric matrix of pairwise product norms: entry (j,k) is
/// ||left[j] * right[k]||^{1/2}, mirrored so symmetry is exact.
ComplexMatrix pairwise_norm_matrix(const std::vector<ComplexMatrix>& left,
                                   const std::vector<ComplexMatrix>& right) {
  const int n = static_cast<int>(left.size());
  ComplexMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      const double value = std::sqrt(op_norm(multiply(left[static_cast<std::size_t>(j)],
                                                      right[static_cast<std::size_t>(k)])));
      out(j, k) = value;
      out(k, j) = value;
    }
  }
  return out;
}

VerificationResult make_inequality_result(std::string name, double lhs, double rhs,
                                          double slack) {
  VerificationResult result;
  result.check_name = std::move(name);
  result.lhs = lhs;
  result.rhs = rhs;
  result.slack_used = slack;
  result.passed = lhs <= rhs + slack;
  return result;
}

}  // namespace

double schur_test_bound(const ComplexMatrix& m) {
  return std::sqrt(max_abs_row_sum(m) * max_abs_col_sum(m));
}

std::pair<ComplexMatrix, ComplexMatrix> ab_matrices(const OperatorFamily& family) {
  std::vector<ComplexMatrix> ops(family.members());
  std::vector<ComplexMatrix> adjoints;
  adjoints.reserve(ops.size());
  for (const ComplexMatrix& t : ops) adjoints.push_back(adjoint(t));
  // a_jk = ||T_j T_k*||^{1/2}, b_jk = ||T_j* T_k||^{1/2}
  return {pairwise_norm_matrix(ops, adjoints), pairwise_norm_matrix(adjoints, ops)};
}

double cotlar_stein_bound(const OperatorFamily& family) {
  const auto [a, b] = ab_matrices(family);
  return max_abs_row_sum(b) * max_abs_row_sum(a);
}

double improved_bound(const OperatorFamily& family) {
  const auto [a, b] = ab_matrices(family);
  return op_norm(a) * op_norm(b);
}

double refined_bound(const OperatorFamily& family, const Tolerances& tol) {
  std::vector<ComplexMatrix> half_abs;
  std::vector<ComplexMatrix> half_abs_star;
  half_abs.reserve(static_cast<std::size_t>(family.size()));
  half_abs_star.reserve(static_cast<std::size_t>(family.size()));
  for (const ComplexMatrix& t : family.members()) {
    half_abs.push_back(psd_sqrt(abs_value(t, tol), tol));
    half_abs_star.push_back(psd_sqrt(abs_value(adjoint(t), tol), tol));
  }
  // Entries are already norms of half-power products, so no square root here.
  const int n = family.size();
  ComplexMatrix left(n, n);
  ComplexMatrix right(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      const double lv = op_norm(multiply(half_abs[static_cast<std::size_t>(j)],
                                         half_abs[static_cast<std::size_t>(k)]));
      const double rv = op_norm(multiply(half_abs_star[static_cast<std::size_t>(j)],
                                         half_abs_star[static_cast<std::size_t>(k)]));
      left(j, k) = lv;
      left(k, j) = lv;
      right(j, k) = rv;
      right(k, j) = rv;
    }
  }
  return op_norm(left) * op_norm(right);
}

double absolute_value_bound(const OperatorFamily& family, const Tolerances& tol) {
  const int d = family.dim();
  ComplexMatrix sum_abs(d, d);
  ComplexMatrix sum_abs_star(d, d);
  for (const ComplexMatrix& t : family.members()) {
    sum_abs = sum_abs + abs_value(t, tol);
    sum_abs_star = sum_abs_star + abs_value(adjoint(t), tol);
  }
  return op_norm(sum_abs) * op_norm(sum_abs_star);
}

double positive_sum_bound(const OperatorFamily& family, const Tolerances& tol) {
  for (const ComplexMatrix& a : family.members()) require_psd(a, tol);
  return op_norm(pairwise_norm_matrix(family.members(), family.members()));
}

VerificationResult half_power_inequality_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                               const Tolerances& tol) {
  if (!a.same_shape(b) || !a.is_square()) {
    throw DimensionError("half_power: operands must be square and share a dimension");
  }
  const double lhs = op_norm(multiply(psd_sqrt(a, tol), psd_sqrt(b, tol)));
  const double rhs = std::sqrt(op_norm(multiply(a, b)));
  return make_inequality_result("half_power", lhs, rhs, slack_at(tol.single_check, rhs));
}

VerificationResult abs_norm_identity_check(const ComplexMatrix& t, const ComplexMatrix& s,
                                           const Tolerances& tol) {
  if (!t.same_shape(s)) {
    throw DimensionError("norm_identity: operands must share a shape");
  }
  const double lhs = op_norm(multiply(abs_value(t, tol), abs_value(s, tol)));
  const double rhs = op_norm(multiply(t, adjoint(s)));
  VerificationResult result;
  result.check_name = "norm_identity";
  result.lhs = lhs;
  result.rhs = rhs;
  result.slack_used = slack_at(tol.chain_check, std::max(lhs, rhs));
  result.passed = std::abs(lhs - rhs) <= result.slack_used;
  return result;
}

VerificationResult mixed_schwarz_check(const OperatorFamily& family, const ComplexVector& x,
                                       const ComplexVector& y, const Tolerances& tol) {
  const int d = family.dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) {
    throw DimensionError("mixed_schwarz: vectors must have the family dimension");
  }
  const ComplexMatrix sum = family.sum();
  ComplexMatrix sum_abs(d, d);
  ComplexMatrix sum_abs_star(d, d);
  for (const ComplexMatrix& t : family.members()) {
    sum_abs = sum_abs + abs_value(t, tol);
    sum_abs_star = sum_abs_star + abs_value(adjoint(t), tol);
  }
  const double lhs = std::norm(inner(apply(sum, x), y));
  const double rhs =
      inner(apply(sum_abs, x), x).real() * inner(apply(sum_abs_star, y), y).real();
  return make_inequality_result("mixed_schwarz", lhs, rhs, slack_at(tol.single_check, rhs));
}

BoundReport full_report(const OperatorFamily& family, const Tolerances& tol) {
  auto [a, b] = ab_matrices(family);

  const double lhs_norm = op_norm(family.sum());
  BoundReport report{
      /*lhs_norm=*/lhs_norm,
      /*lhs_sq=*/lhs_norm * lhs_norm,
      /*absolute_value=*/absolute_value_bound(family, tol),
      /*refined=*/refined_bound(family, tol),
      /*improved=*/op_norm(a) * op_norm(b),
      /*cotlar_stein=*/0.0,
      /*schur_factor_a=*/max_abs_row_sum(a),
      /*schur_factor_b=*/max_abs_row_sum(b),
      /*a_matrix=*/std::move(a),
      /*b_matrix=*/std::move(b),
      /*chain_ok=*/true,
      /*slacks=*/{}};
  report.cotlar_stein = report.schur_factor_a * report.schur_factor_b;

  const double chain[] = {report.lhs_sq, report.absolute_value, report.refined, report.improved,
                          report.cotlar_stein};
  for (int step = 0; step + 1 < 5; ++step) {
    const double lower = chain[step];
    const double upper = chain[step + 1];
    report.slacks.push_back(upper - lower);
    if (lower > upper + slack_at(tol.chain_check, std::max(std::abs(lower), std::abs(upper)))) {
      report.chain_ok = false;
    }
  }
  return report;
}

}  // namespace normlab
