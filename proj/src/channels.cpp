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

#include "chanmetric/channels.hpp"

#include <cmath>
#include <string>

namespace chanmetric {

namespace {

// Row-major vectorization: index a * cols + k.
ComplexVector vec_rows(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index k = 0; k < m.cols(); ++k) v(a * m.cols() + k) = m(a, k);
  return v;
}

void require_dims(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

KrausChannel make_channel(std::vector<ComplexMatrix> kraus, bool require_trace_preserving,
                          const Tolerances& tol) {
  if (kraus.empty()) throw Error(ErrorKind::ShapeMismatch, "empty Kraus list");
  const Eigen::Index rows = kraus.front().rows();
  const Eigen::Index cols = kraus.front().cols();
  if (rows == 0 || cols == 0) throw Error(ErrorKind::ShapeMismatch, "empty Kraus operator");
  ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
  for (const auto& k : kraus) {
    if (k.rows() != rows || k.cols() != cols) {
      throw Error(ErrorKind::ShapeMismatch, "Kraus operators have different shapes");
    }
    if (!k.allFinite()) throw Error(ErrorKind::InvalidInput, "non-finite Kraus entry");
    sum.noalias() += k.adjoint() * k;
  }
  const ComplexMatrix excess = sum - ComplexMatrix::Identity(cols, cols);
  const double deviation = excess.norm();

  KrausChannel ch;
  ch.dim_in_ = cols;
  ch.dim_out_ = rows;
  ch.kraus_ = std::move(kraus);
  ch.trace_deviation_ = deviation;
  if (deviation <= kUnitalTol) {
    ch.kind_ = ChannelKind::channel;
    return ch;
  }
  if (require_trace_preserving) {
    throw Error(ErrorKind::NotTracePreserving,
                "||sum K^H K - 1|| = " + std::to_string(deviation));
  }
  // Operation: sum K^H K <= 1.
  const auto eig = hermitian_eig(excess, tol);
  if (eig.eigenvalues(0) > kUnitalTol) {
    throw Error(ErrorKind::NotTracePreserving,
                "sum K^H K exceeds identity by " + std::to_string(eig.eigenvalues(0)));
  }
  ch.kind_ = ChannelKind::operation;
  return ch;
}

ComplexMatrix apply_schrodinger(const KrausChannel& ch, const ComplexMatrix& rho) {
  require_dims(rho.rows() == ch.dim_in() && rho.cols() == ch.dim_in(),
               "apply_schrodinger: state is not dim_in x dim_in");
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus()) out.noalias() += k * rho * k.adjoint();
  return out;
}

ComplexMatrix apply_heisenberg(const KrausChannel& ch, const ComplexMatrix& b) {
  require_dims(b.rows() == ch.dim_out() && b.cols() == ch.dim_out(),
               "apply_heisenberg: observable is not dim_out x dim_out");
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_in(), ch.dim_in());
  for (const auto& k : ch.kraus()) out.noalias() += k.transpose() * b * k.conjugate();
  return out;
}

OperationalDensity operational_density(const KrausChannel& ch) {
  const Eigen::Index n = ch.dim_in() * ch.dim_out();
  OperationalDensity d{ComplexMatrix::Zero(n, n), ch.dim_in(), ch.dim_out()};
  // |v_j> with v_j[(a, c)] = K_j[c, a], i.e. the row-major vectorization of K_j^T.
  for (const auto& k : ch.kraus()) {
    const ComplexVector v = vec_rows(k.transpose());
    d.matrix.noalias() += v * v.adjoint();
  }
  return d;
}

ComplexMatrix heisenberg_from_density(const OperationalDensity& d, const ComplexMatrix& b) {
  require_dims(b.rows() == d.dim_out && b.cols() == d.dim_out, "observable size");
  const ComplexMatrix lifted =
      kron(ComplexMatrix::Identity(d.dim_in, d.dim_in), b.transpose()) * d.matrix;
  return partial_trace(lifted, d.dim_in, d.dim_out, Subsystem::second);
}

ComplexMatrix schrodinger_from_density(const OperationalDensity& d, const ComplexMatrix& rho) {
  require_dims(rho.rows() == d.dim_in && rho.cols() == d.dim_in, "state size");
  const ComplexMatrix lifted =
      d.matrix * kron(rho.transpose(), ComplexMatrix::Identity(d.dim_out, d.dim_out));
  return partial_trace(lifted, d.dim_in, d.dim_out, Subsystem::first);
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  require_dims(inner.dim_out() == outer.dim_in(), "compose: inner output != outer input");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outer.kraus().size() * inner.kraus().size());
  for (const auto& a : outer.kraus())
    for (const auto& b : inner.kraus()) kraus.emplace_back(a * b);
  return make_channel(std::move(kraus), outer.is_channel() && inner.is_channel());
}

KrausChannel tensor(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus())
    for (const auto& kb : b.kraus()) kraus.emplace_back(kron(ka, kb));
  return make_channel(std::move(kraus), a.is_channel() && b.is_channel());
}

KrausChannel unitary_channel(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::NotUnitary, "matrix is not square");
  const double dev = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
  if (!(dev <= tol)) {
    throw Error(ErrorKind::NotUnitary, "||U^H U - 1|| = " + std::to_string(dev));
  }
  return make_channel({u}, true);
}

KrausChannel mixture_channel(std::span<const double> weights, std::span<const KrausChannel> parts) {
  if (weights.size() != parts.size() || parts.empty()) {
    throw Error(ErrorKind::BadWeights, "need one weight per part");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw Error(ErrorKind::BadWeights, "negative or non-finite weight " + std::to_string(w));
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error(ErrorKind::BadWeights, "weights sum to " + std::to_string(total));
  }
  std::vector<ComplexMatrix> kraus;
  bool all_channels = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require_dims(parts[i].dim_in() == parts[0].dim_in() && parts[i].dim_out() == parts[0].dim_out(),
                 "mixture parts have different dimensions");
    all_channels = all_channels && parts[i].is_channel();
    if (weights[i] == 0) continue;
    for (const auto& k : parts[i].kraus()) kraus.emplace_back(std::sqrt(weights[i]) * k);
  }
  return make_channel(std::move(kraus), all_channels);
}

KrausChannel identity_channel(Eigen::Index dim) {
  return make_channel({ComplexMatrix::Identity(dim, dim)}, true);
}

const std::vector<ComplexMatrix>& pauli_matrices() {
  static const std::vector<ComplexMatrix> paulis = [] {
    const Complex i(0, 1);
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    return std::vector<ComplexMatrix>{id, x, y, z};
  }();
  return paulis;
}

KrausChannel dephasing_channel(double p) {
  if (!(p >= 0 && p <= 1)) throw Error(ErrorKind::BadWeights, "dephasing parameter outside [0,1]");
  const auto& s = pauli_matrices();
  return make_channel({std::sqrt(1 - p) * s[0], std::sqrt(p) * s[3]}, true);
}

KrausChannel pauli_channel(std::span<const double> probs) {
  if (probs.size() != 4) throw Error(ErrorKind::BadWeights, "pauli_channel needs 4 weights");
  std::vector<KrausChannel> parts;
  for (const auto& s : pauli_matrices()) parts.push_back(make_channel({s}, true));
  return mixture_channel(probs, parts);
}

KrausChannel constant_channel(Eigen::Index dim_in, const ComplexMatrix& sigma) {
  const auto state = DensityOperator::from_matrix(sigma);
  const auto eig = hermitian_eig(state.matrix());
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index e = 0; e < eig.eigenvalues.size(); ++e) {
    if (eig.eigenvalues(e) <= 0) continue;
    const ComplexVector out = std::sqrt(eig.eigenvalues(e)) * eig.eigenvectors.col(e);
    for (Eigen::Index i = 0; i < dim_in; ++i) {
      ComplexMatrix k = ComplexMatrix::Zero(sigma.rows(), dim_in);
      k.col(i) = out;
      kraus.push_back(std::move(k));
    }
  }
  return make_channel(std::move(kraus), true);
}

std::vector<ComplexMatrix> canonical_kraus(const KrausChannel& ch) {
  const auto d = operational_density(ch);
  const auto eig = hermitian_eig(d.matrix);
  const double radius = eig.eigenvalues.cwiseAbs().maxCoeff();
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index e = 0; e < eig.eigenvalues.size(); ++e) {
    const double lambda = eig.eigenvalues(e);
    if (lambda <= Tolerances{}.zero * radius) continue;
    const ComplexVector v = std::sqrt(lambda) * eig.eigenvectors.col(e);
    // Invert the vectorization v[(a, c)] = K[c, a].
    ComplexMatrix k(ch.dim_out(), ch.dim_in());
    for (Eigen::Index a = 0; a < ch.dim_in(); ++a)
      for (Eigen::Index c = 0; c < ch.dim_out(); ++c) k(c, a) = v(a * ch.dim_out() + c);
    kraus.push_back(std::move(k));
  }
  return kraus;
}

ComplexMatrix extended_output(const KrausChannel& ch, const ComplexMatrix& coeffs) {
  require_dims(coeffs.rows() == ch.dim_in(), "extended_output: coefficient rows != dim_in");
  const Eigen::Index n = ch.dim_out() * coeffs.cols();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& k : ch.kraus()) {
    const ComplexVector w = vec_rows(k * coeffs);
    out.noalias() += w * w.adjoint();
  }
  return out;
}

}  // namespace chanmetric
