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

#include "chanmetric/linalg.hpp"

namespace chanmetric {

DensityOperator DensityOperator::from_matrix(const ComplexMatrix& m, const Tolerances& tol) {
  const auto eig = hermitian_eig(m, tol);
  detail::clip_psd(eig.eigenvalues, tol, "density operator");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw Error(ErrorKind::InvalidInput, "density operator trace is " + std::to_string(tr));
  }
  return DensityOperator(hermitize(m));
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0)) throw Error(ErrorKind::InvalidInput, "pure state from zero vector");
  return DensityOperator(psi * psi.adjoint() / n2);
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  return DensityOperator(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace chanmetric
