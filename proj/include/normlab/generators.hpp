#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normlab/operator_family.hpp"

namespace normlab {

/// T_1 = I, T_k = (1/n) I for k >= 2, each dim x dim. The family whose
/// Cotlar-Stein bound overshoots the improved bound by a factor ~ n/4.
OperatorFamily scalar_family(int n, int dim);

/// Block-diagonal family on dimension n * block_dim: T_k is norms[k] times
/// the identity on block k and zero elsewhere, so T_j* T_k = T_j T_k* = 0
/// exactly for j != k.
OperatorFamily orthogonal_family(int n, int block_dim, const std::vector<double>& norms);

enum class FamilyKind { general, psd, orthogonal, near_orthogonal };

const char* to_string(FamilyKind kind);

struct RandomFamilyOptions {
  /// Perturbation scale for near_orthogonal, relative to each member's norm.
  double near_orthogonal_eps = 0.05;
};

/// Deterministic in (seed, parameters).
///   general:          entries complex Gaussian scaled by 1/sqrt(dim)
///   psd:              G* G from a general G
///   orthogonal:       orthogonal_family with random norms in [1/2, 2]
///   near_orthogonal:  orthogonal perturbed by eps-scaled Gaussian noise
/// For the (near_)orthogonal kinds, dim is split into n blocks of
/// block_dim = max(1, dim / n), so members have dimension n * block_dim and
/// eps = 0 reproduces orthogonal_family exactly.
OperatorFamily random_family(int n, int dim, std::uint64_t seed, FamilyKind kind,
                             const RandomFamilyOptions& options = {});

}  // namespace normlab
