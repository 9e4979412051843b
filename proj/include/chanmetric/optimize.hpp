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

#include <cstdint>
#include <functional>
#include <vector>

#include "chanmetric/linalg.hpp"

namespace chanmetric {

struct OptConfig {
  int restarts = 20;
  int max_iters = 2000;
  double grad_step = 1e-6;  ///< central-difference step
  double tol = 1e-8;        ///< stop when the tangent gradient norm drops below this
  std::uint64_t seed = 0;
  int sample_budget = 50000;

  /// Throws InvalidInput unless every field is positive and tol < grad_step.
  void validate() const;
};

struct OptResult {
  double value = 0;
  ComplexVector argmin;  ///< unit vector attaining `value` (argmax for maximization)
  std::vector<double> per_restart_values;
  bool converged = false;  ///< true if the best restart met a stopping criterion
  int iterations = 0;      ///< iterations of the best restart
  int total_iterations = 0;
  double grad_norm = 0;    ///< final tangent gradient norm of the best restart
};

/// Real-valued function on the unit sphere of C^dim. Must be pure.
using SphereObjective = std::function<double(const ComplexVector&)>;

enum class Extremum { min, max };

/// Multistart projected gradient descent on the unit sphere with central
/// finite-difference gradients in the 2*dim real coordinates and a halving
/// backtracking line search. Restarts are seeded from cfg.seed and start
/// from normalized Gaussian vectors.
OptResult minimize_over_pure_states(const SphereObjective& objective, Eigen::Index dim,
                                    const OptConfig& cfg);
OptResult maximize_over_pure_states(const SphereObjective& objective, Eigen::Index dim,
                                    const OptConfig& cfg);

/// Extremum over `budget` random unit vectors. A verification oracle only.
double sample_extremum(const SphereObjective& objective, Eigen::Index dim, int budget,
                       Extremum mode, std::uint64_t seed = 0);

/// Central-difference gradient of objective(normalize(x)) at the unit vector
/// x, as a complex vector (d/dRe + i d/dIm). Tangent to the sphere.
ComplexVector sphere_gradient(const SphereObjective& objective, const ComplexVector& x,
                              double step);

/// Normalized vector with i.i.d. standard Gaussian real and imaginary parts.
template <typename Rng>
ComplexVector random_unit_vector(Eigen::Index dim, Rng& rng);

}  // namespace chanmetric

#include <random>

namespace chanmetric {

template <typename Rng>
ComplexVector random_unit_vector(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexVector v(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
  } while (v.norm() == 0);
  return v.normalized();
}

}  // namespace chanmetric
