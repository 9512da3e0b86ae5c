#include "normlab/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "eigen_bridge.hpp"

namespace normlab {

namespace {

void check_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

Eigen::VectorXd singular_values_of(const Eigen::MatrixXcd& m) {
  // JacobiSVD is the accuracy workhorse at desk scale; BDCSVD takes over
  // where its cubic constant starts to hurt.
  if (std::min(m.rows(), m.cols()) <= 32) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  }
  return Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
}

/// Symmetrized (A + A*)/2 after checking the asymmetry budget.
Eigen::MatrixXcd symmetrize_checked(const ComplexMatrix& a, const Tolerances& tol,
                                    const char* op) {
  check_square(a, op);
  const Eigen::MatrixXcd m = to_eigen(a);
  const Eigen::MatrixXcd asym = m - m.adjoint().eval();
  const double scale = op_norm(a);
  const double asym_norm = asym.isZero(0.0) ? 0.0 : singular_values_of(asym)(0);
  if (asym_norm > slack_at(tol.hermitian_input, scale)) {
    throw NotHermitianError(std::string(op) + ": input asymmetry " + std::to_string(asym_norm) +
                            " exceeds tolerance at scale " + std::to_string(scale));
  }
  return 0.5 * (m + m.adjoint().eval());
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a, const Tolerances& tol) {
  const Eigen::MatrixXcd sym = symmetrize_checked(a, tol, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  HermitianEig out{std::vector<double>(solver.eigenvalues().data(),
                                       solver.eigenvalues().data() + a.rows()),
                   from_eigen(solver.eigenvectors())};
  return out;
}

SvdParts svd(const ComplexMatrix& t) {
  const Eigen::MatrixXcd m = to_eigen(t);
  Eigen::JacobiSVD<Eigen::MatrixXcd> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = solver.singularValues();
  return SvdParts{from_eigen(solver.matrixU()),
                  std::vector<double>(sv.data(), sv.data() + sv.size()),
                  from_eigen(solver.matrixV())};
}

double op_norm(const ComplexMatrix& t) {
  if (t.rows() == 1 && t.cols() == 1) return std::abs(t(0, 0));
  if (t.rows() == 1 || t.cols() == 1) {
    double acc = 0.0;
    for (const Complex& z : t.entries()) acc += std::norm(z);
    return std::sqrt(acc);
  }
  return singular_values_of(to_eigen(t))(0);
}

double spectral_radius(const ComplexMatrix& a) {
  check_square(a, "spectral_radius");
  if (a.rows() == 1) return std::abs(a(0, 0));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_radius: eigensolver failed to converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, const Tolerances& tol) {
  const Eigen::MatrixXcd sym = symmetrize_checked(a, tol, "psd_sqrt");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("psd_sqrt: eigensolver failed to converge");
  }
  Eigen::VectorXd lambda = solver.eigenvalues();
  const double scale = std::max(std::abs(lambda(0)), std::abs(lambda(lambda.size() - 1)));
  const double floor = slack_at(tol.psd_clamp, scale);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -floor) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda(i)) +
                            " below the PSD floor " + std::to_string(-floor),
                        lambda(i));
    }
    if (lambda(i) < 0.0) lambda(i) = 0.0;  // clamp rounding-level negatives
  }
  const Eigen::MatrixXcd q = solver.eigenvectors();
  return from_eigen(q * lambda.cwiseSqrt().asDiagonal() * q.adjoint());
}

ComplexMatrix abs_value(const ComplexMatrix& t, const Tolerances& tol) {
  return psd_sqrt(multiply(adjoint(t), t), tol);
}

PolarParts polar(const ComplexMatrix& t, const Tolerances& tol) {
  const Eigen::MatrixXcd m = to_eigen(t);
  Eigen::JacobiSVD<Eigen::MatrixXcd> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sigma = solver.singularValues();
  const double cutoff = sigma.size() > 0 ? tol.polar_cutoff * sigma(0) : 0.0;

  // |T| keeps the full spectrum; only the isometry support is truncated.
  const Eigen::MatrixXcd abs_t =
      solver.matrixV() * sigma.asDiagonal() * solver.matrixV().adjoint();

  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(t.rows(), t.cols());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff && sigma(i) > 0.0) {
      v += solver.matrixU().col(i) * solver.matrixV().col(i).adjoint();
    }
  }
  return PolarParts{from_eigen(v), from_eigen(abs_t), cutoff};
}

void require_psd(const ComplexMatrix& a, const Tolerances& tol) {
  psd_sqrt(a, tol);  // raises NotHermitianError / NotPsdError on violation
}

}  // namespace normlab
