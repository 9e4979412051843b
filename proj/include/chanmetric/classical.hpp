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

#include <span>
#include <vector>

#include "chanmetric/metrics.hpp"

namespace chanmetric {

/// Nonnegative kernel p(y|x): rows indexed by outcomes y, columns by inputs x.
class FiniteKernel {
 public:
  /// Throws InvalidInput on negative or non-finite entries.
  explicit FiniteKernel(Eigen::MatrixXd p);

  const Eigen::MatrixXd& matrix() const { return p_; }
  const Eigen::VectorXd& column_sums() const { return column_sums_; }
  /// Every column sums to 1 within 1e-10.
  bool stochastic() const { return stochastic_; }

 private:
  Eigen::MatrixXd p_;
  Eigen::VectorXd column_sums_;
  bool stochastic_ = false;
};

/// Family of positive operators summing to the identity within 1e-9.
class Povm {
 public:
  /// Throws NotPOVM.
  explicit Povm(std::vector<ComplexMatrix> elements);

  const std::vector<ComplexMatrix>& elements() const { return elements_; }
  Eigen::Index dim() const { return elements_.front().rows(); }
  std::size_t outcomes() const { return elements_.size(); }

 private:
  std::vector<ComplexMatrix> elements_;
};

/// sum_i sqrt(p_i q_i) / sqrt(sum p * sum q). Throws ZeroMass.
double classical_fidelity(std::span<const double> p, std::span<const double> q);
/// 1/2 sum_i (sqrt(p_i) - sqrt(q_i))^2.
double classical_hellinger(std::span<const double> p, std::span<const double> q);

struct KernelFidelity {
  double value;
  Eigen::Index argmin;  ///< minimizing input column
};

/// min over inputs x of sum_y sqrt(p(y|x) q(y|x)). Throws NotStochastic.
KernelFidelity kernel_minimax_fidelity(const FiniteKernel& p, const FiniteKernel& q);

/// min over x of the Uhlmann fidelity of rho(x) and sigma(x).
KernelFidelity cq_fidelity(std::span<const DensityOperator> rho, std::span<const DensityOperator> sigma);

/// sum_y Tr sqrt(M_y (rho N_y rho)) at a fixed state.
double qc_pointwise_fidelity(const Povm& m, const Povm& n, const ComplexMatrix& rho);

/// Infimum over states of qc_pointwise_fidelity. States are parametrized by
/// unit vectors on g (x) g through their reduced state.
MinimaxResult qc_povm_fidelity(const Povm& m, const Povm& n, const OptConfig& cfg);

/// Kernel p(y|x) = <x|M_y|x> induced by a POVM on the computational basis.
FiniteKernel induced_kernel(const Povm& m);

/// Sums elements `a` and `b` into one outcome (placed at index min(a, b)).
Povm merge_outcomes(const Povm& m, std::size_t a, std::size_t b);

}  // namespace chanmetric
