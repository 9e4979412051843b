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

#include "chanmetric/closedforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chanmetric {

namespace {

constexpr double kGeomEps = 1e-12;
constexpr double kUnitaryTol = 1e-8;

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double origin_to_segment(const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0) return a.norm();
  const double t = std::clamp(-a.dot(ab) / len2, 0.0, 1.0);
  return (a + t * ab).norm();
}

void require_unitary(const ComplexMatrix& u, const char* name) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::NotUnitary, std::string(name) + " not square");
  const double dev = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
  if (!(dev <= kUnitaryTol)) {
    throw Error(ErrorKind::NotUnitary, std::string(name) + ": ||U^H U - 1|| = " + std::to_string(dev));
  }
}

}  // namespace

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Point2& a, const Point2& b) { return (a - b).norm() <= kGeomEps; }),
               points.end());
  if (points.size() <= 2) return points;

  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= kGeomEps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= kGeomEps) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  if (hull.size() == 1) hull.push_back(points.back());  // all collinear
  return hull;
}

double origin_distance_to_hull(std::span<const Point2> hull) {
  if (hull.empty()) throw Error(ErrorKind::InvalidInput, "empty hull");
  if (hull.size() == 1) return hull[0].norm();
  if (hull.size() == 2) return origin_to_segment(hull[0], hull[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  const Point2 origin = Point2::Zero();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2& a = hull[i];
    const Point2& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, origin) < -kGeomEps) inside = false;
    best = std::min(best, origin_to_segment(a, b));
  }
  return inside ? 0.0 : best;
}

UnitaryFidelity unitary_minimax_fidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
  require_unitary(u, "U");
  require_unitary(v, "V");
  if (u.rows() != v.rows()) throw Error(ErrorKind::DimensionMismatch, "U and V differ in size");
  const ComplexMatrix w = u.adjoint() * v;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(w, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::NoConvergence, "eigensolver failed");

  UnitaryFidelity out;
  std::vector<Point2> points;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const Complex z = solver.eigenvalues()(i);
    out.hull.eigenvalues.push_back(z);
    points.emplace_back(z.real(), z.imag());
  }
  out.hull.hull_vertices = convex_hull(std::move(points));
  out.hull.origin_distance = std::min(1.0, origin_distance_to_hull(out.hull.hull_vertices));
  out.value = out.hull.origin_distance;
  return out;
}

double unitary_cb_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  const double d = unitary_minimax_fidelity(u, v).value;
  return std::sqrt(std::max(0.0, 1 - d * d));
}

double gaussian_noise_fidelity(double mu, double nu) {
  if (!(mu > 0) || !(nu > 0) || !std::isfinite(mu) || !std::isfinite(nu)) {
    throw Error(ErrorKind::NonPositiveParameter, "Gaussian noise variances must be positive");
  }
  return std::sqrt(mu * nu) / (0.5 * (mu + nu));
}

double random_unitary_fidelity_bound(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty()) throw Error(ErrorKind::BadWeights, "length mismatch");
  double sp = 0, sq = 0, bc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0) || !(q[i] >= 0)) throw Error(ErrorKind::BadWeights, "negative weight");
    sp += p[i];
    sq += q[i];
    bc += std::sqrt(p[i] * q[i]);
  }
  if (std::abs(sp - 1) > 1e-10 || std::abs(sq - 1) > 1e-10) {
    throw Error(ErrorKind::BadWeights, "weights must sum to 1");
  }
  return bc;
}

KrausChannel lindblad_short_time_channel(const ComplexMatrix& x, double eps) {
  if (x.rows() != x.cols()) throw Error(ErrorKind::DimensionMismatch, "X must be square");
  const ComplexMatrix xx = hermitize(x.adjoint() * x);
  const double top = hermitian_eig(xx).eigenvalues(0);
  if (!(eps > 0) || !(1 - 0.5 * eps * top > 0)) {
    throw Error(ErrorKind::EpsilonTooLarge, "need eps > 0 and 1 - eps ||X^H X|| / 2 > 0");
  }
  const Eigen::Index d = x.rows();
  const ComplexMatrix k0 = ComplexMatrix::Identity(d, d) - 0.5 * eps * xx;
  const ComplexMatrix k1 = std::sqrt(eps) * x;
  const auto eig = hermitian_eig(hermitize(k0.adjoint() * k0 + k1.adjoint() * k1));
  const ComplexMatrix norm = eig.eigenvectors *
                             eig.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                             eig.eigenvectors.adjoint();
  return make_channel({k0 * norm, k1 * norm}, true);
}

LindbladFidelity lindblad_infinitesimal_fidelity(const ComplexMatrix& x, double eps,
                                                 const OptConfig& cfg) {
  LindbladFidelity out{.channel = lindblad_short_time_channel(x, eps)};
  const ComplexMatrix xx = x.adjoint() * x;
  const SphereObjective variance = [&](const ComplexVector& psi) {
    const double second = psi.dot(xx * psi).real();
    return second - std::norm(psi.dot(x * psi));
  };
  const OptResult low = minimize_over_pure_states(variance, x.rows(), cfg);
  const OptResult high = maximize_over_pure_states(variance, x.rows(), cfg);
  out.c = std::max(0.0, low.value);
  out.minimizer = low.argmin;
  out.worst_variance = std::max(0.0, high.value);
  out.predicted = std::sqrt(std::max(0.0, 1 - eps * out.c));
  out.predicted_worst = std::sqrt(std::max(0.0, 1 - eps * out.worst_variance));
  return out;
}

}  // namespace chanmetric
