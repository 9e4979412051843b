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

#include "chanmetric/classical.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace chanmetric {

namespace {

constexpr double kStochasticTol = 1e-10;
constexpr double kPovmTol = 1e-9;

void check_mass(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "vectors differ in length");
  double sp = 0, sq = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0) || !(q[i] >= 0)) throw Error(ErrorKind::InvalidInput, "negative mass");
    sp += p[i];
    sq += q[i];
  }
  if (!(sp > 0) || !(sq > 0)) throw Error(ErrorKind::ZeroMass, "vector with zero total mass");
}

}  // namespace

FiniteKernel::FiniteKernel(Eigen::MatrixXd p) : p_(std::move(p)) {
  if (p_.size() == 0) throw Error(ErrorKind::InvalidInput, "empty kernel");
  if (!p_.allFinite() || p_.minCoeff() < 0) {
    throw Error(ErrorKind::InvalidInput, "kernel entries must be finite and nonnegative");
  }
  column_sums_ = p_.colwise().sum().transpose();
  stochastic_ = (column_sums_.array() - 1).abs().maxCoeff() <= kStochasticTol;
}

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorKind::NotPOVM, "no elements");
  const Eigen::Index d = elements_.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (const auto& e : elements_) {
    if (e.rows() != d || e.cols() != d) throw Error(ErrorKind::NotPOVM, "elements differ in shape");
    try {
      const auto eig = hermitian_eig(e);
      if (eig.eigenvalues(d - 1) < -kPovmTol) throw Error(ErrorKind::NotPOVM, "element not positive");
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::NotPOVM) throw;
      throw Error(ErrorKind::NotPOVM, err.what());
    }
    total += e;
  }
  const double dev = (total - ComplexMatrix::Identity(d, d)).norm();
  if (dev > kPovmTol) {
    throw Error(ErrorKind::NotPOVM, "elements sum to identity only within " + std::to_string(dev));
  }
}

double classical_fidelity(std::span<const double> p, std::span<const double> q) {
  check_mass(p, q);
  double bc = 0, sp = 0, sq = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bc += std::sqrt(p[i] * q[i]);
    sp += p[i];
    sq += q[i];
  }
  return bc / std::sqrt(sp * sq);
}

double classical_hellinger(std::span<const double> p, std::span<const double> q) {
  check_mass(p, q);
  double h = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    h += d * d;
  }
  return 0.5 * h;
}

KernelFidelity kernel_minimax_fidelity(const FiniteKernel& p, const FiniteKernel& q) {
  if (!p.stochastic() || !q.stochastic()) throw Error(ErrorKind::NotStochastic, "columns must sum to 1");
  if (p.matrix().rows() != q.matrix().rows() || p.matrix().cols() != q.matrix().cols()) {
    throw Error(ErrorKind::DimensionMismatch, "kernels differ in shape");
  }
  const Eigen::MatrixXd overlap = p.matrix().cwiseProduct(q.matrix()).cwiseSqrt();
  KernelFidelity out{0, 0};
  out.value = overlap.colwise().sum().minCoeff(&out.argmin);
  return out;
}

KernelFidelity cq_fidelity(std::span<const DensityOperator> rho, std::span<const DensityOperator> sigma) {
  if (rho.size() != sigma.size() || rho.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "families differ in length");
  }
  KernelFidelity out{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t x = 0; x < rho.size(); ++x) {
    const double f = state_fidelity(rho[x], sigma[x]);
    if (f < out.value) out = {f, static_cast<Eigen::Index>(x)};
  }
  return out;
}

namespace {

// Tr sqrt(M (rho N rho)) = || N^{1/2} rho M^{1/2} ||_1. The singular values
// avoid squaring rho, which would push small contributions below roundoff.
double qc_sum(const std::vector<ComplexMatrix>& root_m, const std::vector<ComplexMatrix>& root_n,
              const ComplexMatrix& rho) {
  double total = 0;
  for (std::size_t y = 0; y < root_m.size(); ++y) total += trace_norm(root_n[y] * rho * root_m[y]);
  return total;
}

std::vector<ComplexMatrix> roots(const Povm& m) {
  std::vector<ComplexMatrix> out;
  for (const auto& e : m.elements()) out.push_back(psd_sqrt(e));
  return out;
}

void require_compatible(const Povm& m, const Povm& n) {
  if (m.outcomes() != n.outcomes() || m.dim() != n.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "POVMs differ in shape");
  }
}

}  // namespace

double qc_pointwise_fidelity(const Povm& m, const Povm& n, const ComplexMatrix& rho) {
  require_compatible(m, n);
  if (rho.rows() != m.dim() || rho.cols() != m.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state is not on the POVM space");
  }
  return qc_sum(roots(m), roots(n), rho);
}

MinimaxResult qc_povm_fidelity(const Povm& m, const Povm& n, const OptConfig& cfg) {
  require_compatible(m, n);
  const Eigen::Index d = m.dim();
  auto root_m = std::make_shared<const std::vector<ComplexMatrix>>(roots(m));
  auto root_n = std::make_shared<const std::vector<ComplexMatrix>>(roots(n));
  const SphereObjective objective = [root_m, root_n, d](const ComplexVector& u) {
    return qc_sum(*root_m, *root_n, reduced_state(u, d));
  };
  const OptResult r = minimize_over_pure_states(objective, d * d, cfg);
  MinimaxResult out{r.value, r.argmin, Route::density, {}};
  out.diagnostics = diagnostics_from(r);
  return out;
}

FiniteKernel induced_kernel(const Povm& m) {
  Eigen::MatrixXd p(m.outcomes(), m.dim());
  for (std::size_t y = 0; y < m.outcomes(); ++y)
    for (Eigen::Index x = 0; x < m.dim(); ++x) p(y, x) = std::max(0.0, m.elements()[y](x, x).real());
  return FiniteKernel(std::move(p));
}

Povm merge_outcomes(const Povm& m, std::size_t a, std::size_t b) {
  if (a == b || a >= m.outcomes() || b >= m.outcomes()) {
    throw Error(ErrorKind::InvalidInput, "merge needs two distinct outcome indices");
  }
  std::vector<ComplexMatrix> out;
  for (std::size_t y = 0; y < m.outcomes(); ++y) {
    if (y == std::max(a, b)) continue;
    out.push_back(y == std::min(a, b) ? ComplexMatrix(m.elements()[a] + m.elements()[b])
                                      : m.elements()[y]);
  }
  return Povm(std::move(out));
}

}  // namespace chanmetric
