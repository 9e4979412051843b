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

#include "chanmetric/channels.hpp"
#include "chanmetric/optimize.hpp"

namespace chanmetric {

using Point2 = Eigen::Vector2d;

/// Spectrum of W = U^H V as planar points with its convex hull.
struct SpectrumHull {
  std::vector<Complex> eigenvalues;
  std::vector<Point2> hull_vertices;  ///< counter-clockwise, no repeated points
  double origin_distance = 0;
};

/// Convex hull of planar points by Andrew's monotone chain. Collinear and
/// duplicate points are dropped; a single point or a segment is returned as
/// one or two vertices.
std::vector<Point2> convex_hull(std::vector<Point2> points);
/// Euclidean distance from the origin to the convex polygon with the given
/// counter-clockwise vertices (0 if the origin is inside or on the boundary).
double origin_distance_to_hull(std::span<const Point2> hull);

struct UnitaryFidelity {
  double value;
  SpectrumHull hull;
};

/// Minimax fidelity of the unitary channels rho -> U rho U^H and rho -> V rho V^H:
/// the distance from the origin to the convex hull of the spectrum of U^H V.
UnitaryFidelity unitary_minimax_fidelity(const ComplexMatrix& u, const ComplexMatrix& v);
/// sqrt(1 - d^2) with d the hull distance above.
double unitary_cb_distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// Minimax fidelity between Gaussian displacement-noise channels with
/// variances mu and nu: sqrt(mu nu) / ((mu + nu) / 2).
double gaussian_noise_fidelity(double mu, double nu);

/// Bhattacharyya coefficient sum_i sqrt(p_i q_i); lower bound for the
/// minimax fidelity of random-unitary channels sharing the unitaries.
double random_unitary_fidelity_bound(std::span<const double> p, std::span<const double> q);

struct LindbladFidelity {
  /// sqrt(1 - eps * C).
  double predicted = 0;
  /// inf over pure states of <X^H X> - |<X>|^2.
  double c = 0;
  /// sup over pure states of the same variance. The minimax fidelity of the
  /// short-time channel against the identity is sqrt(1 - eps * worst_variance)
  /// up to O(eps^2), since the infimum over states of a decreasing function of
  /// the variance picks its supremum.
  double worst_variance = 0;
  double predicted_worst = 0;
  ComplexVector minimizer;
  /// Kraus pair {1 - eps/2 X^H X, sqrt(eps) X}, right-multiplied by
  /// (sum K^H K)^{-1/2} so that it is exactly trace preserving.
  KrausChannel channel;
};

/// Throws EpsilonTooLarge unless eps > 0 and 1 - eps/2 ||X^H X|| > 0.
LindbladFidelity lindblad_infinitesimal_fidelity(const ComplexMatrix& x, double eps,
                                                 const OptConfig& cfg);
/// The renormalized short-time channel alone.
KrausChannel lindblad_short_time_channel(const ComplexMatrix& x, double eps);

}  // namespace chanmetric
