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

#include <string_view>
#include <vector>

#include "chanmetric/channels.hpp"
#include "chanmetric/optimize.hpp"

namespace chanmetric {

/// Three algebraically distinct evaluations of the same minimax fidelity.
///  - density: Tr sqrt(D_Phi [(rho^T (x) 1) D_Psi (rho^T (x) 1)]) from operational densities
///  - purification: Uhlmann fidelity of (Phi_* (x) id) and (Psi_* (x) id) on |u><u|
///  - stinespring: || Tr_h(F rho V^H) ||_1 from the Stinespring blocks
enum class Route { density, purification, stinespring };

std::string_view to_string(Route route);
/// Throws RouteUnavailable for an unknown name.
Route parse_route(std::string_view name);

struct Diagnostics {
  int restarts = 0;
  int iterations = 0;        ///< iterations of the best restart
  int total_iterations = 0;  ///< summed over restarts
  double grad_norm = 0;
  std::vector<double> per_restart_values;
  double spread = 0;  ///< max - min over restarts
  bool converged = false;
  bool trace_preserving = true;  ///< false when either input is a strict operation
};

/// Optimizer telemetry of a finished run.
Diagnostics diagnostics_from(const OptResult& r);

struct MinimaxResult {
  double value = 0;
  ComplexVector minimizer;  ///< unit vector on g (x) g
  Route route = Route::purification;
  Diagnostics diagnostics;
};

// ---- state level -----------------------------------------------------------

/// Uhlmann fidelity Tr (rho^{1/2} sigma rho^{1/2})^{1/2}.
double state_fidelity(const DensityOperator& rho, const DensityOperator& sigma);
/// Half the trace norm of rho - sigma.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
/// sqrt(1 - F). Throws OutOfRange unless F is in [0, 1] (within 1e-9).
double bures_distance(double fidelity);
double bures_distance(const DensityOperator& rho, const DensityOperator& sigma);
/// sqrt(1 - f) for a channel fidelity f.
double hellinger_channel_distance(double fidelity);

// ---- channel level ---------------------------------------------------------

/// Fidelity of the Choi states (Phi_* (x) id)(pi), (Psi_* (x) id)(pi) with pi
/// the normalized maximally entangled state on g (x) g.
double entangled_channel_fidelity(const KrausChannel& phi, const KrausChannel& psi);

/// Minimax integrand at a fixed input state. The state enters the operational
/// density sandwich transposed, which makes it the reduced state of the
/// purification used by the other routes.
double pointwise_minimax_fidelity(const KrausChannel& phi, const KrausChannel& psi,
                                  const DensityOperator& rho);

/// 1/2 Tr[(D_Phi + D_Psi)(rho^T (x) 1)] - pointwise_minimax_fidelity.
double hellinger_pointwise_distance(const KrausChannel& phi, const KrausChannel& psi,
                                    const DensityOperator& rho);

/// Tr_h(F rho V^H) for Kraus lists zero-padded to dim_in * dim_out entries;
/// entry (j, l) is Tr(K_j rho L_l^H).
ComplexMatrix stinespring_overlap(const KrausChannel& phi, const KrausChannel& psi,
                                  const ComplexMatrix& rho);

/// Reduced state on the first factor of the unit vector u in C^dim (x) C^dim.
ComplexMatrix reduced_state(const ComplexVector& u, Eigen::Index dim);

/// Minimax objective as a function on the unit sphere of g (x) g.
SphereObjective minimax_objective(const KrausChannel& phi, const KrausChannel& psi, Route route);
/// Output trace distance as a function on the unit sphere of g (x) g.
SphereObjective cb_objective(const KrausChannel& phi, const KrausChannel& psi);

/// Infimum over input states (entangled with a copy of g) of the output fidelity.
MinimaxResult minimax_fidelity(const KrausChannel& phi, const KrausChannel& psi, Route route,
                               const OptConfig& cfg);

/// Half the CB-norm distance, as the supremum over unit u in g (x) g of the
/// output trace distance.
MinimaxResult cb_distance(const KrausChannel& phi, const KrausChannel& psi, const OptConfig& cfg);

// ---- effects ---------------------------------------------------------------

/// Pointwise squared Hellinger distance between two effects (0 <= E <= 1):
/// 1/2 Tr[(E + F) rho] - Tr sqrt(E (rho F rho)). Throws NotEffect.
double effect_fidelity_distance(const ComplexMatrix& e, const ComplexMatrix& f,
                                const DensityOperator& rho);
/// Supremum of effect_fidelity_distance over all states.
MinimaxResult effect_distance_sup(const ComplexMatrix& e, const ComplexMatrix& f,
                                  const OptConfig& cfg);

}  // namespace chanmetric
