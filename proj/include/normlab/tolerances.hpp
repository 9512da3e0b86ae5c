#pragma once

namespace normlab {

/// Central tolerance record. Every tolerance is relative with a +1 absolute
/// floor: a quantity at scale s is compared against tol * (1 + s), so checks
/// stay meaningful for both tiny and order-one operators.
struct Tolerances {
  /// Allowed asymmetry ||A - A*|| before a "Hermitian" input is rejected.
  /// Below the threshold the input is symmetrized to (A + A*)/2.
  double hermitian_input = 1e-10;

  /// Eigenvalues of a PSD input in [-floor, 0) are clamped to 0; anything
  /// below the floor raises NotPsdError.
  double psd_clamp = 1e-10;

  /// Singular values below cutoff * sigma_max are treated as zero when
  /// forming the partial isometry of a polar decomposition.
  double polar_cutoff = 1e-12;

  /// Reconstruction quality contract for eig/svd factorizations.
  double reconstruction = 1e-10;

  /// Comparison slack for single-decomposition checks.
  double single_check = 1e-9;

  /// Comparison slack for chained inequalities (two decompositions deep).
  double chain_check = 1e-8;
};

/// Absolute slack for a relative tolerance at the given scale.
inline double slack_at(double tol, double scale) { return tol * (1.0 + scale); }

}  // namespace normlab
