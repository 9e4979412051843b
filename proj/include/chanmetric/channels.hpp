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

#include "chanmetric/linalg.hpp"

namespace chanmetric {

enum class ChannelKind { channel, operation };

/// Completely positive map stored by Schrodinger-picture Kraus operators
/// K_j : C^dim_in -> C^dim_out, acting as rho -> sum_j K_j rho K_j^H.
///
/// The Heisenberg-picture map B -> sum_j K_j^T B conj(K_j) is its transpose
/// under the pairing (B, rho) = Tr(B rho^T).
class KrausChannel {
 public:
  Eigen::Index dim_in() const { return dim_in_; }
  Eigen::Index dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  ChannelKind kind() const { return kind_; }
  bool is_channel() const { return kind_ == ChannelKind::channel; }
  /// Frobenius norm of sum_j K_j^H K_j - 1.
  double trace_deviation() const { return trace_deviation_; }

 private:
  friend KrausChannel make_channel(std::vector<ComplexMatrix>, bool, const Tolerances&);
  Eigen::Index dim_in_ = 0;
  Eigen::Index dim_out_ = 0;
  std::vector<ComplexMatrix> kraus_;
  ChannelKind kind_ = ChannelKind::channel;
  double trace_deviation_ = 0;
};

/// Positive operator on g (x) h (input factor slow) reproducing the channel
/// through Phi(B) = Tr_h[(1 (x) B^T) D] and Phi_*(rho) = Tr_g[D (rho^T (x) 1)].
struct OperationalDensity {
  ComplexMatrix matrix;
  Eigen::Index dim_in = 0;
  Eigen::Index dim_out = 0;
};

/// Validates a Kraus list. With `require_trace_preserving` the sum
/// K^H K must equal 1 within `unital_tol`; otherwise it may also be <= 1 and
/// the result is flagged as an operation.
KrausChannel make_channel(std::vector<ComplexMatrix> kraus, bool require_trace_preserving = true,
                          const Tolerances& tol = {});

inline constexpr double kUnitalTol = 1e-8;

ComplexMatrix apply_schrodinger(const KrausChannel& ch, const ComplexMatrix& rho);
ComplexMatrix apply_heisenberg(const KrausChannel& ch, const ComplexMatrix& b);

OperationalDensity operational_density(const KrausChannel& ch);
/// Tr_h[(1 (x) B^T) D]
ComplexMatrix heisenberg_from_density(const OperationalDensity& d, const ComplexMatrix& b);
/// Tr_g[D (rho^T (x) 1)]
ComplexMatrix schrodinger_from_density(const OperationalDensity& d, const ComplexMatrix& rho);

/// Schrodinger composition: outer after inner.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);
KrausChannel tensor(const KrausChannel& a, const KrausChannel& b);
KrausChannel unitary_channel(const ComplexMatrix& u, double tol = kUnitalTol);
KrausChannel mixture_channel(std::span<const double> weights, std::span<const KrausChannel> parts);

KrausChannel identity_channel(Eigen::Index dim);
/// rho -> (1 - p) rho + p sigma_z rho sigma_z on a qubit.
KrausChannel dephasing_channel(double p);
/// Mixture of the four Pauli unitaries I, X, Y, Z with the given weights.
/// Equal weights give the fully depolarizing channel rho -> Tr(rho) 1/2.
KrausChannel pauli_channel(std::span<const double> probs);
/// Replaces every input by the fixed state `sigma`.
KrausChannel constant_channel(Eigen::Index dim_in, const ComplexMatrix& sigma);

/// Kraus operators read off the eigendecomposition of the operational
/// density; at most dim_in * dim_out of them.
std::vector<ComplexMatrix> canonical_kraus(const KrausChannel& ch);

/// (Phi_* (x) id)(|u><u|) for u in g (x) k, with u given as its coefficient
/// matrix C (u = sum_ak C_ak |a>|k>, dim_in x dim_k). Output lives on h (x) k.
ComplexMatrix extended_output(const KrausChannel& ch, const ComplexMatrix& coeffs);

/// The four Pauli matrices I, X, Y, Z.
const std::vector<ComplexMatrix>& pauli_matrices();

}  // namespace chanmetric
