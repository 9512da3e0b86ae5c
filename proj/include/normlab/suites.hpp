#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normlab/bounds.hpp"
#include "normlab/generators.hpp"
#include "normlab/operator_family.hpp"
#include "normlab/tolerances.hpp"

namespace normlab {

enum class Suite {
  all,
  half_power,
  positive_sum,
  abs_value,
  norm_identity,
  mixed_schwarz,
  improved,
  cotlar_stein,
  chain,
};

const char* to_string(Suite suite);
std::optional<Suite> suite_from_string(const std::string& name);

struct SuiteConfig {
  int trials = 100;
  int dim_min = 1;
  int dim_max = 8;
  int size_min = 1;
  int size_max = 12;
  std::uint64_t seed = 0;
  Tolerances tol{};
  /// Family kinds sampled for checks without a PSD precondition.
  std::vector<FamilyKind> kinds = {FamilyKind::general, FamilyKind::psd,
                                   FamilyKind::near_orthogonal};
};

/// Randomized verification of the named check (or every check for
/// Suite::all). One result per (trial, check), ordered by trial index then
/// check name; deterministic given the config. Inputs for trial t of check c
/// flow from derive_seed(config.seed, check ordinal, t), which is the seed
/// recorded in each result. Failures carry the serialized family as witness.
std::vector<VerificationResult> run_suite(Suite suite, const SuiteConfig& config);

struct GapRow {
  int n;
  double lhs_sq;
  double improved;
  double cotlar_stein;
  double ratio_cs_over_improved;
};

/// One GapRow per n for the scalar family of the given dimension.
std::vector<GapRow> gap_experiment(const std::vector<int>& n_values, int dim,
                                   const Tolerances& tol = {});

/// Same, for a caller-supplied family generator (n -> family).
std::vector<GapRow> gap_experiment(const std::vector<int>& n_values,
                                   const std::function<OperatorFamily(int)>& generator,
                                   const Tolerances& tol = {});

struct TailRow {
  int m;
  int n;
  double tail_norm_sq;
  double cauchy_bound;
};

/// ||sum_{k=m}^{n} T_k x||^2 against
/// (sum_{k=m}^{n} <|T_k| x, x>) * ||sum_{k=m}^{n} |T_k*|||; 1-based inclusive
/// window into the family. Throws std::out_of_range for bad windows.
TailRow tail_cauchy_check(const OperatorFamily& family, const ComplexVector& x, int m, int n,
                          const Tolerances& tol = {});

/// Samples unimodular coefficient sequences (eps_k) and checks
/// ||sum eps_k T_k|| <= sqrt(improved_bound) + slack for each; lhs of the
/// result is the worst observed norm.
VerificationResult epsilon_uniform_check(const OperatorFamily& family, int trials,
                                         std::uint64_t seed, const Tolerances& tol = {});

}  // namespace normlab
