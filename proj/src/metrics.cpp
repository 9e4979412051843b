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

#include "chanmetric/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace chanmetric {

namespace {

constexpr double kRangeSlack = 1e-9;

void require_same_dims(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw Error(ErrorKind::DimensionMismatch, "channels have different dimensions");
  }
}

ComplexMatrix coefficients(const ComplexVector& u, Eigen::Index dim) {
  if (u.size() != dim * dim) {
    throw Error(ErrorKind::DimensionMismatch, "vector is not on g (x) g");
  }
  ComplexMatrix c(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index k = 0; k < dim; ++k) c(a, k) = u(a * dim + k);
  return c;
}

}  // namespace

Diagnostics diagnostics_from(const OptResult& r) {
  Diagnostics d;
  d.restarts = static_cast<int>(r.per_restart_values.size());
  d.iterations = r.iterations;
  d.total_iterations = r.total_iterations;
  d.grad_norm = r.grad_norm;
  d.per_restart_values = r.per_restart_values;
  const auto [lo, hi] = std::minmax_element(r.per_restart_values.begin(), r.per_restart_values.end());
  d.spread = *hi - *lo;
  d.converged = r.converged;
  return d;
}

namespace {

Diagnostics diagnostics_from(const OptResult& r, const KrausChannel& phi, const KrausChannel& psi) {
  Diagnostics d = diagnostics_from(r);
  d.trace_preserving = phi.is_channel() && psi.is_channel();
  return d;
}

// Kraus list padded with zeros to `count` entries.
std::vector<ComplexMatrix> padded_kraus(const KrausChannel& ch, std::size_t count) {
  std::vector<ComplexMatrix> k =
      ch.kraus().size() > count ? canonical_kraus(ch) : ch.kraus();
  k.resize(count, ComplexMatrix::Zero(ch.dim_out(), ch.dim_in()));
  return k;
}

void check_effect(const ComplexMatrix& e, const Tolerances& tol) {
  const auto eig = hermitian_eig(e, tol);
  if (eig.eigenvalues(eig.eigenvalues.size() - 1) < -tol.psd ||
      eig.eigenvalues(0) > 1 + tol.psd) {
    throw Error(ErrorKind::NotEffect, "eigenvalues outside [0, 1]");
  }
}

}  // namespace

std::string_view to_string(Route route) {
  switch (route) {
    case Route::density: return "density";
    case Route::purification: return "purification";
    case Route::stinespring: return "stinespring";
  }
  return "unknown";
}

Route parse_route(std::string_view name) {
  if (name == "density") return Route::density;
  if (name == "purification") return Route::purification;
  if (name == "stinespring") return Route::stinespring;
  throw Error(ErrorKind::RouteUnavailable, "unknown route '" + std::string(name) + "'");
}

double state_fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "state dimensions differ");
  return trace_sqrt_product(rho.matrix(), sigma.matrix());
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "state dimensions differ");
  return 0.5 * hermitian_trace_norm(rho.matrix() - sigma.matrix());
}

double bures_distance(double fidelity) {
  if (!(fidelity >= -kRangeSlack && fidelity <= 1 + kRangeSlack)) {
    throw Error(ErrorKind::OutOfRange, "fidelity " + std::to_string(fidelity) + " outside [0,1]");
  }
  return std::sqrt(std::clamp(1.0 - fidelity, 0.0, 1.0));
}

double bures_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  return bures_distance(state_fidelity(rho, sigma));
}

double hellinger_channel_distance(double fidelity) { return bures_distance(fidelity); }

double entangled_channel_fidelity(const KrausChannel& phi, const KrausChannel& psi) {
  require_same_dims(phi, psi);
  const Eigen::Index m = phi.dim_in();
  const ComplexMatrix c = ComplexMatrix::Identity(m, m) / std::sqrt(static_cast<double>(m));
  return trace_sqrt_product(extended_output(phi, c), extended_output(psi, c));
}

double pointwise_minimax_fidelity(const KrausChannel& phi, const KrausChannel& psi,
                                  const DensityOperator& rho) {
  require_same_dims(phi, psi);
  if (rho.dim() != phi.dim_in()) throw Error(ErrorKind::DimensionMismatch, "state is not on g");
  const ComplexMatrix lift =
      kron(rho.matrix().transpose(), ComplexMatrix::Identity(phi.dim_out(), phi.dim_out()));
  const ComplexMatrix sandwich = lift * operational_density(psi).matrix * lift;
  return trace_sqrt_product(operational_density(phi).matrix, sandwich);
}

double hellinger_pointwise_distance(const KrausChannel& phi, const KrausChannel& psi,
                                    const DensityOperator& rho) {
  const double fid = pointwise_minimax_fidelity(phi, psi, rho);
  const ComplexMatrix lift =
      kron(rho.matrix().transpose(), ComplexMatrix::Identity(phi.dim_out(), phi.dim_out()));
  const ComplexMatrix both = operational_density(phi).matrix + operational_density(psi).matrix;
  return 0.5 * (both * lift).trace().real() - fid;
}

ComplexMatrix stinespring_overlap(const KrausChannel& phi, const KrausChannel& psi,
                                  const ComplexMatrix& rho) {
  require_same_dims(phi, psi);
  if (rho.rows() != phi.dim_in() || rho.cols() != phi.dim_in()) {
    throw Error(ErrorKind::DimensionMismatch, "state is not on g");
  }
  const auto n = static_cast<std::size_t>(phi.dim_in() * phi.dim_out());
  const auto f = padded_kraus(phi, n);
  const auto v = padded_kraus(psi, n);
  ComplexMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) m(j, l) = (f[j] * rho * v[l].adjoint()).trace();
  return m;
}

ComplexMatrix reduced_state(const ComplexVector& u, Eigen::Index dim) {
  const ComplexMatrix c = coefficients(u, dim);
  return c * c.adjoint();
}

SphereObjective minimax_objective(const KrausChannel& phi, const KrausChannel& psi, Route route) {
  require_same_dims(phi, psi);
  const Eigen::Index m = phi.dim_in();
  const Eigen::Index h = phi.dim_out();
  switch (route) {
    case Route::density: {
      auto root = std::make_shared<const ComplexMatrix>(psd_sqrt(operational_density(phi).matrix));
      auto dpsi = std::make_shared<const ComplexMatrix>(operational_density(psi).matrix);
      return [root, dpsi, m, h](const ComplexVector& u) {
        const ComplexMatrix rho = reduced_state(u, m);
        const ComplexMatrix lift = kron(rho.transpose(), ComplexMatrix::Identity(h, h));
        return trace_sqrt_product_with_root(*root, lift * (*dpsi) * lift);
      };
    }
    case Route::purification:
      return [phi, psi, m](const ComplexVector& u) {
        const ComplexMatrix c = coefficients(u, m);
        return trace_sqrt_product(extended_output(phi, c), extended_output(psi, c));
      };
    case Route::stinespring: {
      // Only the unpadded block matters: zero rows and columns leave the trace
      // norm unchanged. blocks[j][l] = L_l^H K_j so that M_jl = Tr(blocks[j][l] rho).
      const auto& kf = phi.kraus();
      const auto& kv = psi.kraus();
      auto blocks = std::make_shared<std::vector<ComplexMatrix>>();
      for (const auto& a : kf)
        for (const auto& b : kv) blocks->push_back(b.adjoint() * a);
      const auto rows = static_cast<Eigen::Index>(kf.size());
      const auto cols = static_cast<Eigen::Index>(kv.size());
      return [blocks, rows, cols, m](const ComplexVector& u) {
        const ComplexMatrix rho = reduced_state(u, m);
        ComplexMatrix overlap(rows, cols);
        for (Eigen::Index j = 0; j < rows; ++j)
          for (Eigen::Index l = 0; l < cols; ++l)
            overlap(j, l) = (*blocks)[j * cols + l].cwiseProduct(rho.transpose()).sum();
        return trace_norm(overlap);
      };
    }
  }
  throw Error(ErrorKind::RouteUnavailable, "unknown route");
}

SphereObjective cb_objective(const KrausChannel& phi, const KrausChannel& psi) {
  require_same_dims(phi, psi);
  const Eigen::Index m = phi.dim_in();
  return [phi, psi, m](const ComplexVector& u) {
    const ComplexMatrix c = coefficients(u, m);
    return 0.5 * hermitian_trace_norm(extended_output(phi, c) - extended_output(psi, c));
  };
}

MinimaxResult minimax_fidelity(const KrausChannel& phi, const KrausChannel& psi, Route route,
                               const OptConfig& cfg) {
  const Eigen::Index m = phi.dim_in();
  const OptResult r = minimize_over_pure_states(minimax_objective(phi, psi, route), m * m, cfg);
  return MinimaxResult{r.value, r.argmin, route, diagnostics_from(r, phi, psi)};
}

MinimaxResult cb_distance(const KrausChannel& phi, const KrausChannel& psi, const OptConfig& cfg) {
  const Eigen::Index m = phi.dim_in();
  const OptResult r = maximize_over_pure_states(cb_objective(phi, psi), m * m, cfg);
  return MinimaxResult{r.value, r.argmin, Route::purification, diagnostics_from(r, phi, psi)};
}

double effect_fidelity_distance(const ComplexMatrix& e, const ComplexMatrix& f,
                                const DensityOperator& rho) {
  const Tolerances tol;
  if (e.rows() != f.rows() || e.rows() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "effects and state differ in size");
  }
  check_effect(e, tol);
  check_effect(f, tol);
  const ComplexMatrix& r = rho.matrix();
  // Tr sqrt(E (rho F rho)) = || F^{1/2} rho E^{1/2} ||_1
  return 0.5 * ((e + f) * r).trace().real() - trace_norm(psd_sqrt(f, tol) * r * psd_sqrt(e, tol));
}

MinimaxResult effect_distance_sup(const ComplexMatrix& e, const ComplexMatrix& f,
                                  const OptConfig& cfg) {
  const Tolerances tol;
  if (e.rows() != f.rows()) throw Error(ErrorKind::DimensionMismatch, "effects differ in size");
  check_effect(e, tol);
  check_effect(f, tol);
  const Eigen::Index m = e.rows();
  const ComplexMatrix root_e = psd_sqrt(e, tol);
  const ComplexMatrix root_f = psd_sqrt(f, tol);
  const ComplexMatrix sum = e + f;
  const SphereObjective objective = [&](const ComplexVector& u) {
    const ComplexMatrix r = reduced_state(u, m);
    return 0.5 * (sum * r).trace().real() - trace_norm(root_f * r * root_e);
  };
  const OptResult r = maximize_over_pure_states(objective, m * m, cfg);
  return MinimaxResult{r.value, r.argmin, Route::density, diagnostics_from(r)};
}

}  // namespace chanmetric
