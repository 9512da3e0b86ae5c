#include "normlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "normlab/family_io.hpp"
#include "normlab/linalg.hpp"
#include "normlab/rng.hpp"

namespace normlab {

namespace {

// Stable ordinals for seed derivation; independent of emission order.
constexpr std::uint64_t check_ordinal(Suite s) { return static_cast<std::uint64_t>(s); }

// Emission order within a trial: check name, ascending.
constexpr Suite kChecksByName[] = {Suite::abs_value,     Suite::chain,
                                   Suite::cotlar_stein,  Suite::half_power,
                                   Suite::improved,      Suite::mixed_schwarz,
                                   Suite::norm_identity, Suite::positive_sum};

ComplexVector gaussian_vector(int dim, Rng& rng) {
  ComplexVector x(static_cast<std::size_t>(dim));
  for (Complex& z : x) z = rng.gaussian_complex();
  return x;
}

VerificationResult run_check(Suite check, std::uint64_t trial_seed, const SuiteConfig& config) {
  Rng rng(trial_seed);
  const int dim = rng.uniform_int(config.dim_min, config.dim_max);
  const int n = rng.uniform_int(config.size_min, config.size_max);
  const FamilyKind kind =
      config.kinds[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(config.kinds.size()) - 1))];
  const Tolerances& tol = config.tol;

  VerificationResult result;
  OperatorFamily family({ComplexMatrix::identity(1)});  // replaced below

  switch (check) {
    case Suite::half_power: {
      family = random_family(2, dim, rng.next_u64(), FamilyKind::psd);
      result = half_power_inequality_check(family.member(0), family.member(1), tol);
      break;
    }
    case Suite::positive_sum: {
      family = random_family(n, dim, rng.next_u64(), FamilyKind::psd);
      const double lhs = op_norm(family.sum());
      const double rhs = positive_sum_bound(family, tol);
      result.check_name = "positive_sum";
      result.lhs = lhs;
      result.rhs = rhs;
      result.slack_used = slack_at(tol.single_check, rhs);
      result.passed = lhs <= rhs + result.slack_used;
      break;
    }
    case Suite::abs_value: {
      family = random_family(n, dim, rng.next_u64(), kind);
      const double lhs_norm = op_norm(family.sum());
      const double lhs = lhs_norm * lhs_norm;
      const double rhs = absolute_value_bound(family, tol);
      result.check_name = "abs_value";
      result.lhs = lhs;
      result.rhs = rhs;
      result.slack_used = slack_at(tol.single_check, rhs);
      result.passed = lhs <= rhs + result.slack_used;
      break;
    }
    case Suite::norm_identity: {
      family = random_family(2, dim, rng.next_u64(), FamilyKind::general);
      result = abs_norm_identity_check(family.member(0), family.member(1), tol);
      break;
    }
    case Suite::mixed_schwarz: {
      family = random_family(n, dim, rng.next_u64(), kind);
      const ComplexVector x = gaussian_vector(family.dim(), rng);
      const ComplexVector y = gaussian_vector(family.dim(), rng);
      result = mixed_schwarz_check(family, x, y, tol);
      break;
    }
    case Suite::improved: {
      family = random_family(n, dim, rng.next_u64(), kind);
      const double lhs_norm = op_norm(family.sum());
      const double lhs = lhs_norm * lhs_norm;
      const double rhs = improved_bound(family);
      result.check_name = "improved";
      result.lhs = lhs;
      result.rhs = rhs;
      result.slack_used = slack_at(tol.single_check, rhs);
      result.passed = lhs <= rhs + result.slack_used;
      break;
    }
    case Suite::cotlar_stein: {
      family = random_family(n, dim, rng.next_u64(), kind);
      const double lhs_norm = op_norm(family.sum());
      const double lhs = lhs_norm * lhs_norm;
      const double rhs = cotlar_stein_bound(family);
      result.check_name = "cotlar_stein";
      result.lhs = lhs;
      result.rhs = rhs;
      result.slack_used = slack_at(tol.single_check, rhs);
      result.passed = lhs <= rhs + result.slack_used;
      break;
    }
    case Suite::chain: {
      family = random_family(n, dim, rng.next_u64(), kind);
      const BoundReport report = full_report(family, tol);
      const double chain[] = {report.lhs_sq, report.absolute_value, report.refined,
                              report.improved, report.cotlar_stein};
      int worst = 0;
      double worst_margin = 0.0;
      for (int step = 0; step + 1 < 5; ++step) {
        const double allowed =
            slack_at(tol.chain_check, std::max(std::abs(chain[step]), std::abs(chain[step + 1])));
        const double margin = chain[step + 1] + allowed - chain[step];
        if (step == 0 || margin < worst_margin) {
          worst = step;
          worst_margin = margin;
        }
      }
      result.check_name = "chain";
      result.lhs = chain[worst];
      result.rhs = chain[worst + 1];
      result.slack_used =
          slack_at(tol.chain_check, std::max(std::abs(chain[worst]), std::abs(chain[worst + 1])));
      result.passed = report.chain_ok;
      break;
    }
    case Suite::all:
      throw std::logic_error("run_check: Suite::all is not a single check");
  }

  result.seed = trial_seed;
  if (!result.passed) result.witness = family_to_json(family);
  return result;
}

}  // namespace

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::half_power: return "half_power";
    case Suite::positive_sum: return "positive_sum";
    case Suite::abs_value: return "abs_value";
    case Suite::norm_identity: return "norm_identity";
    case Suite::mixed_schwarz: return "mixed_schwarz";
    case Suite::improved: return "improved";
    case Suite::cotlar_stein: return "cotlar_stein";
    case Suite::chain: return "chain";
  }
  return "?";
}

std::optional<Suite> suite_from_string(const std::string& name) {
  for (Suite s : {Suite::all, Suite::half_power, Suite::positive_sum, Suite::abs_value,
                  Suite::norm_identity, Suite::mixed_schwarz, Suite::improved,
                  Suite::cotlar_stein, Suite::chain}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<VerificationResult> run_suite(Suite suite, const SuiteConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("run_suite: trials must be >= 1");
  if (config.dim_min < 1 || config.dim_max < config.dim_min) {
    throw std::invalid_argument("run_suite: bad dimension range");
  }
  if (config.size_min < 1 || config.size_max < config.size_min) {
    throw std::invalid_argument("run_suite: bad family size range");
  }
  if (config.kinds.empty()) throw std::invalid_argument("run_suite: no family kinds");

  std::vector<Suite> checks;
  if (suite == Suite::all) {
    checks.assign(std::begin(kChecksByName), std::end(kChecksByName));
  } else {
    checks.push_back(suite);
  }

  std::vector<VerificationResult> results;
  results.reserve(static_cast<std::size_t>(config.trials) * checks.size());
  for (int trial = 0; trial < config.trials; ++trial) {
    for (Suite check : checks) {
      const std::uint64_t trial_seed =
          derive_seed(config.seed, check_ordinal(check), static_cast<std::uint64_t>(trial));
      results.push_back(run_check(check, trial_seed, config));
    }
  }
  return results;
}

std::vector<GapRow> gap_experiment(const std::vector<int>& n_values, int dim,
                                   const Tolerances& tol) {
  return gap_experiment(
      n_values, [dim](int n) { return scalar_family(n, dim); }, tol);
}

std::vector<GapRow> gap_experiment(const std::vector<int>& n_values,
                                   const std::function<OperatorFamily(int)>& generator,
                                   const Tolerances& tol) {
  std::vector<GapRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    if (n < 1) throw std::invalid_argument("gap_experiment: n must be >= 1");
    const BoundReport report = full_report(generator(n), tol);
    rows.push_back(GapRow{n, report.lhs_sq, report.improved, report.cotlar_stein,
                          report.cotlar_stein / report.improved});
  }
  return rows;
}

TailRow tail_cauchy_check(const OperatorFamily& family, const ComplexVector& x, int m, int n,
                          const Tolerances& tol) {
  if (m < 1 || n < m || n > family.size()) {
    throw std::out_of_range("tail_cauchy_check: window [" + std::to_string(m) + ", " +
                            std::to_string(n) + "] out of range for family of size " +
                            std::to_string(family.size()));
  }
  if (static_cast<int>(x.size()) != family.dim()) {
    throw DimensionError("tail_cauchy_check: vector must have the family dimension");
  }
  const int d = family.dim();
  ComplexMatrix window_sum(d, d);
  ComplexMatrix window_abs_star(d, d);
  double quad_sum = 0.0;
  for (int k = m; k <= n; ++k) {
    const ComplexMatrix& t = family.member(k - 1);
    window_sum = window_sum + t;
    window_abs_star = window_abs_star + abs_value(adjoint(t), tol);
    quad_sum += inner(apply(abs_value(t, tol), x), x).real();
  }
  const double tail_norm = vector_norm(apply(window_sum, x));
  return TailRow{m, n, tail_norm * tail_norm, quad_sum * op_norm(window_abs_star)};
}

VerificationResult epsilon_uniform_check(const OperatorFamily& family, int trials,
                                         std::uint64_t seed, const Tolerances& tol) {
  if (trials < 1) throw std::invalid_argument("epsilon_uniform_check: trials must be >= 1");
  const double rhs = std::sqrt(improved_bound(family));
  Rng rng(splitmix64(seed));
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<ComplexMatrix> scaled;
    scaled.reserve(static_cast<std::size_t>(family.size()));
    for (const ComplexMatrix& t : family.members()) scaled.push_back(rng.unit_complex() * t);
    worst = std::max(worst, op_norm(OperatorFamily(std::move(scaled)).sum()));
  }
  VerificationResult result;
  result.check_name = "epsilon_uniform";
  result.lhs = worst;
  result.rhs = rhs;
  result.slack_used = slack_at(tol.single_check, rhs);
  result.passed = worst <= rhs + result.slack_used;
  result.seed = seed;
  if (!result.passed) result.witness = family_to_json(family);
  return result;
}

}  // namespace normlab
