// Copyright 2026 The chanmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "chanmetric/error.hpp"

namespace chanmetric {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Numerical thresholds shared by the spectral routines. Every threshold is
/// relative to the spectral radius (or Frobenius norm) of the operand.
struct Tolerances {
  double herm = 1e-8;   ///< accepted ||M - M^H|| / ||M||
  double psd = 1e-8;    ///< eigenvalues >= -psd * radius are clipped, below is NotPSD
  double zero = 1e-12;  ///< eigenvalues <= zero * radius are exact zeros
  double pinv = 1e-10;  ///< singular values below pinv * sigma_max are dropped
  double trace = 1e-8;  ///< unit-trace check for density operators
};

template <typename Scalar>
struct HermitianEig {
  DenseVector<typename Eigen::NumTraits<Scalar>::Real> eigenvalues;  // descending
  DenseMatrix<Scalar> eigenvectors;                                   // columns
};

enum class Subsystem { first, second };

template <typename Derived>
DenseMatrix<typename Derived::Scalar> hermitize(const Eigen::MatrixBase<Derived>& m) {
  return (m + m.adjoint()) / typename Derived::RealScalar(2);
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= rel_tol * m.norm();
}

template <typename Derived>
HermitianEig<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& m,
                                                     const Tolerances& tol = {}) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "hermitian_eig needs a square matrix");
  }
  if (!is_hermitian(m, tol.herm)) {
    throw Error(ErrorKind::NonHermitian, "asymmetry exceeds tolerance");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NoConvergence, "self-adjoint eigensolver failed");
  }
  // Eigen sorts ascending.
  HermitianEig<Scalar> out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

namespace detail {

template <typename Real>
Real spectral_radius(const DenseVector<Real>& lambda) {
  return lambda.size() == 0 ? Real(0) : lambda.cwiseAbs().maxCoeff();
}

// Clips eigenvalues in the tolerance band to zero; throws below it. `scale`
// bounds the roundoff of the operand when it was formed as a product whose
// factors are larger than the result.
template <typename Real>
DenseVector<Real> clip_psd(const DenseVector<Real>& lambda, const Tolerances& tol,
                           const char* what, Real scale = Real(0)) {
  const Real radius = spectral_radius(lambda);
  scale = std::max(scale, radius);
  const Real floor = std::max(Real(tol.zero) * radius,
                              Real(64) * Eigen::NumTraits<Real>::epsilon() * scale);
  DenseVector<Real> out = lambda;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < -tol.psd * scale) {
      throw Error(ErrorKind::NotPSD, std::string(what) + " has eigenvalue " +
                                         std::to_string(static_cast<double>(out(i))));
    }
    if (out(i) <= floor) out(i) = Real(0);
  }
  return out;
}

}  // namespace detail

/// Positive square root A^{1/2} of a positive semidefinite matrix.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> psd_sqrt(const Eigen::MatrixBase<Derived>& a,
                                               const Tolerances& tol = {}) {
  const auto eig = hermitian_eig(a, tol);
  const auto lambda = detail::clip_psd(eig.eigenvalues, tol, "psd_sqrt operand");
  return eig.eigenvectors * lambda.cwiseSqrt().asDiagonal() * eig.eigenvectors.adjoint();
}

/// Sum of singular values.
template <typename Derived>
typename Derived::RealScalar trace_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<DenseMatrix<typename Derived::Scalar>> svd(m);
  return svd.singularValues().sum();
}

/// Trace norm of a Hermitian matrix via its eigenvalues (cheaper than the SVD).
template <typename Derived>
typename Derived::RealScalar hermitian_trace_norm(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(hermitize(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

/// Kronecker product with the first factor as the slow index.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  DenseMatrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Partial trace of an operator on a (d1 x d2)-dimensional product space,
/// row-major ordering, first factor slow. Tracing out `which` leaves the other.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& m,
                                                    Eigen::Index d1, Eigen::Index d2,
                                                    Subsystem which) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols() || m.rows() != d1 * d2) {
    throw Error(ErrorKind::DimensionMismatch,
                "partial_trace: side " + std::to_string(m.rows()) + " != " +
                    std::to_string(d1) + "*" + std::to_string(d2));
  }
  if (which == Subsystem::second) {
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
  }
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(d2, d2);
  for (Eigen::Index k = 0; k < d1; ++k) out += m.block(k * d2, k * d2, d2, d2);
  return out;
}

/// Trace pairing (B, rho) = Tr(B rho^T) = sum_jk B_jk rho_jk.
template <typename DerivedB, typename DerivedR>
typename DerivedB::Scalar transpose_pairing(const Eigen::MatrixBase<DerivedB>& b,
                                            const Eigen::MatrixBase<DerivedR>& rho) {
  if (b.rows() != b.cols() || b.rows() != rho.rows() || b.cols() != rho.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "transpose_pairing operands differ in shape");
  }
  return b.cwiseProduct(rho).sum();
}

/// Tr (R^{1/2} S R^{1/2})^{1/2} given the root R^{1/2} already computed.
template <typename DerivedR, typename DerivedS>
typename DerivedR::RealScalar trace_sqrt_product_with_root(
    const Eigen::MatrixBase<DerivedR>& root_r, const Eigen::MatrixBase<DerivedS>& s,
    const Tolerances& tol = {}) {
  using Scalar = typename DerivedR::Scalar;
  using Real = typename DerivedR::RealScalar;
  if (root_r.rows() != s.rows() || s.rows() != s.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "trace_sqrt_product operands differ in size");
  }
  const DenseMatrix<Scalar> inner = hermitize(root_r * s * root_r);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(inner, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NoConvergence, "self-adjoint eigensolver failed");
  }
  const Real scale = root_r.squaredNorm() * s.norm();
  const DenseVector<Real> lambda =
      detail::clip_psd<Real>(solver.eigenvalues(), tol, "R^{1/2} S R^{1/2}", scale);
  return lambda.cwiseSqrt().sum();
}

/// Tr sqrt(RS) := Tr (R^{1/2} S R^{1/2})^{1/2} for positive R, S.
template <typename DerivedR, typename DerivedS>
typename DerivedR::RealScalar trace_sqrt_product(const Eigen::MatrixBase<DerivedR>& r,
                                                 const Eigen::MatrixBase<DerivedS>& s,
                                                 const Tolerances& tol = {}) {
  if (r.rows() != s.rows() || r.cols() != s.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "trace_sqrt_product operands differ in size");
  }
  return trace_sqrt_product_with_root(psd_sqrt(r, tol), s, tol);
}

/// Pseudo-inverse of a Hermitian matrix, dropping eigenvalues below
/// tol.pinv times the spectral radius.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> hermitian_pinv(const Eigen::MatrixBase<Derived>& m,
                                                     const Tolerances& tol = {}) {
  const auto eig = hermitian_eig(m, tol);
  const auto radius = detail::spectral_radius(eig.eigenvalues);
  auto inv = eig.eigenvalues;
  for (Eigen::Index i = 0; i < inv.size(); ++i) {
    inv(i) = std::abs(inv(i)) > tol.pinv * radius ? 1 / inv(i) : 0;
  }
  return eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
}

/// The operator sqrt(AB) = S (S B S)^{1/2} S^+ with S = A^{1/2}, for positive
/// A and B. AB is similar to S B S, so this is the square root of AB on the
/// range of A and vanishes on its kernel.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> extended_sqrt_product(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
    const Tolerances& tol = {}) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "extended_sqrt_product operands differ in size");
  }
  const DenseMatrix<Scalar> s = psd_sqrt(a, tol);
  const DenseMatrix<Scalar> middle = psd_sqrt(hermitize(s * b * s), tol);
  return s * middle * hermitian_pinv(s, tol);
}

/// Positive unit-trace matrix.
class DensityOperator {
 public:
  /// Validates Hermiticity, positivity (within tol.psd) and unit trace.
  static DensityOperator from_matrix(const ComplexMatrix& m, const Tolerances& tol = {});
  /// |psi><psi| / <psi|psi>.
  static DensityOperator pure(const ComplexVector& psi);
  static DensityOperator maximally_mixed(Eigen::Index dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

}  // namespace chanmetric
