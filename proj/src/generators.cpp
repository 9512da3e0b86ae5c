#include "normlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "normlab/rng.hpp"

namespace normlab {

namespace {

void check_counts(int n, int dim, const char* op) {
  if (n < 1) throw std::invalid_argument(std::string(op) + ": family size must be >= 1");
  if (dim < 1) throw std::invalid_argument(std::string(op) + ": dimension must be >= 1");
}

ComplexMatrix gaussian_matrix(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = scale * rng.gaussian_complex();
  return g;
}

std::vector<double> random_norms(int n, Rng& rng) {
  std::vector<double> norms(static_cast<std::size_t>(n));
  for (double& v : norms) v = 0.5 + 1.5 * rng.uniform01();
  return norms;
}

}  // namespace

OperatorFamily scalar_family(int n, int dim) {
  check_counts(n, dim, "scalar_family");
  std::vector<ComplexMatrix> members;
  members.reserve(static_cast<std::size_t>(n));
  members.push_back(ComplexMatrix::identity(dim));
  const double small = 1.0 / static_cast<double>(n);
  for (int k = 1; k < n; ++k) members.push_back(small * ComplexMatrix::identity(dim));
  return OperatorFamily(std::move(members),
                        "scalar(n=" + std::to_string(n) + ",dim=" + std::to_string(dim) + ")");
}

OperatorFamily orthogonal_family(int n, int block_dim, const std::vector<double>& norms) {
  check_counts(n, block_dim, "orthogonal_family");
  if (static_cast<int>(norms.size()) != n) {
    throw std::invalid_argument("orthogonal_family: need one norm per member");
  }
  for (double v : norms) {
    if (!(v >= 0.0)) throw std::domain_error("orthogonal_family: norms must be nonnegative");
  }
  const int dim = n * block_dim;
  std::vector<ComplexMatrix> members;
  members.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    ComplexMatrix t(dim, dim);
    for (int i = 0; i < block_dim; ++i) {
      t(k * block_dim + i, k * block_dim + i) = norms[static_cast<std::size_t>(k)];
    }
    members.push_back(std::move(t));
  }
  return OperatorFamily(std::move(members), "orthogonal(n=" + std::to_string(n) +
                                                ",block=" + std::to_string(block_dim) + ")");
}

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::general: return "general";
    case FamilyKind::psd: return "psd";
    case FamilyKind::orthogonal: return "orthogonal";
    case FamilyKind::near_orthogonal: return "near_orthogonal";
  }
  return "?";
}

OperatorFamily random_family(int n, int dim, std::uint64_t seed, FamilyKind kind,
                             const RandomFamilyOptions& options) {
  check_counts(n, dim, "random_family");
  Rng rng(splitmix64(seed));
  const std::string label = std::string("random(kind=") + to_string(kind) +
                            ",n=" + std::to_string(n) + ",dim=" + std::to_string(dim) +
                            ",seed=" + std::to_string(seed) + ")";

  std::vector<ComplexMatrix> members;
  members.reserve(static_cast<std::size_t>(n));

  switch (kind) {
    case FamilyKind::general: {
      for (int k = 0; k < n; ++k) members.push_back(gaussian_matrix(dim, rng));
      break;
    }
    case FamilyKind::psd: {
      for (int k = 0; k < n; ++k) {
        const ComplexMatrix g = gaussian_matrix(dim, rng);
        members.push_back(multiply(adjoint(g), g));
      }
      break;
    }
    case FamilyKind::orthogonal:
    case FamilyKind::near_orthogonal: {
      const int block_dim = std::max(1, dim / n);
      const std::vector<double> norms = random_norms(n, rng);
      OperatorFamily base = orthogonal_family(n, block_dim, norms);
      const double eps =
          (kind == FamilyKind::near_orthogonal) ? options.near_orthogonal_eps : 0.0;
      for (int k = 0; k < n; ++k) {
        ComplexMatrix t = base.member(k);
        if (eps != 0.0) {
          const ComplexMatrix noise = gaussian_matrix(base.dim(), rng);
          t = t + (eps * norms[static_cast<std::size_t>(k)]) * noise;
        }
        members.push_back(std::move(t));
      }
      break;
    }
  }
  return OperatorFamily(std::move(members), label);
}

}  // namespace normlab
