#pragma once

#include <vector>

#include "normlab/complex_matrix.hpp"
#include "normlab/tolerances.hpp"

namespace normlab {

/// Full spectral decomposition of a Hermitian matrix: A = Q diag(l) Q* with
/// eigenvalues ascending and Q unitary.
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Thin SVD T = U diag(s) V* with singular values descending.
struct SvdParts {
  ComplexMatrix U;
  std::vector<double> singular_values;
  ComplexMatrix V;
};

/// Polar decomposition T = V |T|. V is a partial isometry supported on the
/// singular directions above rank_cutoff (absolute threshold actually used).
struct PolarParts {
  ComplexMatrix V;
  ComplexMatrix absT;
  double rank_cutoff;
};

/// Spectral decomposition of a Hermitian input. Inputs asymmetric beyond
/// tol.hermitian_input (relative) are rejected; smaller asymmetry is
/// symmetrized away as (A + A*)/2.
HermitianEig hermitian_eig(const ComplexMatrix& a, const Tolerances& tol = {});

SvdParts svd(const ComplexMatrix& t);

/// Operator norm: the largest singular value (0 for the zero matrix).
double op_norm(const ComplexMatrix& t);

/// Max |lambda| over the (generally complex) eigenvalues of a square matrix.
double spectral_radius(const ComplexMatrix& a);

/// PSD square root via spectral decomposition. Eigenvalues in
/// [-psd_clamp floor, 0) are clamped to 0; anything lower raises NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, const Tolerances& tol = {});

/// |T| = (T* T)^{1/2}.
ComplexMatrix abs_value(const ComplexMatrix& t, const Tolerances& tol = {});

PolarParts polar(const ComplexMatrix& t, const Tolerances& tol = {});

/// Throws NotPsdError / NotHermitianError unless a is PSD within tolerance.
void require_psd(const ComplexMatrix& a, const Tolerances& tol = {});

}  // namespace normlab
