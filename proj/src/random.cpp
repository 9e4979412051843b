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

#include "chanmetric/random.hpp"

#include <cmath>

namespace chanmetric {

namespace {

ComplexMatrix inverse_sqrt(const ComplexMatrix& s) {
  const auto eig = hermitian_eig(s);
  return eig.eigenvectors * eig.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
         eig.eigenvectors.adjoint();
}

}  // namespace

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

ComplexMatrix random_hermitian(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix b = random_gaussian(dim, dim, rng);
  return b + b.adjoint();
}

ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_gaussian(dim, dim, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1);
  }
  return q;
}

ComplexMatrix random_density(Eigen::Index dim, Rng& rng, Eigen::Index rank) {
  const ComplexMatrix g = random_gaussian(dim, rank <= 0 ? dim : rank, rng);
  const ComplexMatrix rho = g * g.adjoint();
  return hermitize(rho / rho.trace().real());
}

ComplexMatrix random_psd(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  return hermitize(g.adjoint() * g);
}

KrausChannel random_channel(Eigen::Index dim_in, Eigen::Index dim_out, std::size_t kraus_count,
                            Rng& rng) {
  std::vector<ComplexMatrix> g;
  ComplexMatrix s = ComplexMatrix::Zero(dim_in, dim_in);
  for (std::size_t j = 0; j < kraus_count; ++j) {
    g.push_back(random_gaussian(dim_out, dim_in, rng));
    s += g.back().adjoint() * g.back();
  }
  const ComplexMatrix norm = inverse_sqrt(hermitize(s));
  for (auto& k : g) k = k * norm;
  return make_channel(std::move(g), true);
}

std::vector<ComplexMatrix> random_povm(Eigen::Index dim, std::size_t outcomes, Rng& rng) {
  std::vector<ComplexMatrix> a;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (std::size_t y = 0; y < outcomes; ++y) {
    a.push_back(random_psd(dim, rng));
    s += a.back();
  }
  const ComplexMatrix norm = inverse_sqrt(hermitize(s));
  for (auto& e : a) e = hermitize(norm * e * norm);
  return a;
}

std::vector<double> random_probabilities(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0;
  for (auto& x : p) total += (x = expo(rng));
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace chanmetric
