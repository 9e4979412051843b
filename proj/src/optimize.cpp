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

#include "chanmetric/optimize.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace chanmetric {

namespace {

constexpr double kMinStep = 1e-12;
constexpr int kHistory = 6;

// Real coordinates (Re..., Im...) of a complex vector, and back.
Eigen::VectorXd to_real(const ComplexVector& z) {
  Eigen::VectorXd x(2 * z.size());
  x << z.real(), z.imag();
  return x;
}

ComplexVector to_complex(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size() / 2;
  ComplexVector z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = Complex(x(i), x(n + i));
  return z;
}

double eval(const SphereObjective& f, const Eigen::VectorXd& x) {
  const double v = f(to_complex(x / x.norm()));
  if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "objective returned non-finite value");
  return v;
}

Eigen::VectorXd real_gradient(const SphereObjective& f, const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + h;
    const double up = eval(f, probe);
    probe(i) = x(i) - h;
    const double down = eval(f, probe);
    probe(i) = x(i);
    g(i) = (up - down) / (2 * h);
  }
  // objective(normalize(.)) is scale invariant, so g is already tangent up to
  // O(h^2); remove the radial residue.
  g -= g.dot(x) * x;
  return g;
}

struct RestartOutcome {
  double value;
  Eigen::VectorXd x;
  bool converged;
  int iterations;
  double grad_norm;
};

// Descent on the sphere. Search direction is a limited-memory quasi-Newton
// correction of the finite-difference gradient, falling back to steepest
// descent whenever the correction is not a descent direction.
RestartOutcome descend(const SphereObjective& f, Eigen::VectorXd x, const OptConfig& cfg) {
  double fx = eval(f, x);
  Eigen::VectorXd g = real_gradient(f, x, cfg.grad_step);
  std::deque<std::pair<Eigen::VectorXd, Eigen::VectorXd>> history;  // (s, y)
  RestartOutcome out{fx, x, false, 0, g.norm()};

  for (int it = 0; it < cfg.max_iters; ++it) {
    out.iterations = it + 1;
    const double gnorm = g.norm();
    out.grad_norm = gnorm;
    if (gnorm < cfg.tol) {
      out.converged = true;
      break;
    }

    // Two-loop recursion.
    Eigen::VectorXd q = g;
    std::vector<double> alpha(history.size());
    for (std::size_t k = history.size(); k-- > 0;) {
      const auto& [s, y] = history[k];
      alpha[k] = s.dot(q) / y.dot(s);
      q -= alpha[k] * y;
    }
    if (!history.empty()) {
      const auto& [s, y] = history.back();
      q *= s.dot(y) / y.dot(y);
    } else {
      q *= 0.1 / gnorm;
    }
    for (std::size_t k = 0; k < history.size(); ++k) {
      const auto& [s, y] = history[k];
      const double beta = y.dot(q) / y.dot(s);
      q += (alpha[k] - beta) * s;
    }
    Eigen::VectorXd dir = -(q - q.dot(x) * x);
    if (!(dir.dot(g) < 0) || !dir.allFinite()) {
      history.clear();
      dir = -g * (0.1 / gnorm);
    }

    double t = 1.0;
    Eigen::VectorXd trial;
    double ftrial = fx;
    bool decreased = false;
    while (t * dir.norm() >= kMinStep) {
      trial = x + t * dir;
      trial.normalize();
      ftrial = eval(f, trial);
      if (ftrial < fx) {
        decreased = true;
        break;
      }
      t *= 0.5;
    }
    if (!decreased) {
      if (!history.empty()) {
        // Retry once along the plain gradient before declaring a stationary point.
        history.clear();
        continue;
      }
      out.converged = true;  // no decrease down to the minimum step
      break;
    }

    const Eigen::VectorXd gtrial = real_gradient(f, trial, cfg.grad_step);
    // Transport the previous gradient and step into the new tangent space.
    Eigen::VectorXd s = trial - x;
    s -= s.dot(trial) * trial;
    Eigen::VectorXd y = gtrial - (g - g.dot(trial) * trial);
    if (s.dot(y) > 1e-16 * s.norm() * y.norm()) {
      history.emplace_back(std::move(s), std::move(y));
      if (history.size() > kHistory) history.pop_front();
    }
    x = trial;
    fx = ftrial;
    g = gtrial;
  }
  out.value = fx;
  out.x = x;
  out.grad_norm = g.norm();
  return out;
}

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

}  // namespace

void OptConfig::validate() const {
  if (restarts <= 0 || max_iters <= 0 || !(grad_step > 0) || !(tol > 0) || sample_budget <= 0) {
    throw Error(ErrorKind::InvalidInput, "OptConfig fields must be positive");
  }
  if (!(tol < grad_step)) throw Error(ErrorKind::InvalidInput, "OptConfig requires tol < grad_step");
}

ComplexVector sphere_gradient(const SphereObjective& objective, const ComplexVector& x,
                              double step) {
  return to_complex(real_gradient(objective, to_real(x.normalized()), step));
}

OptResult minimize_over_pure_states(const SphereObjective& objective, Eigen::Index dim,
                                    const OptConfig& cfg) {
  cfg.validate();
  if (dim <= 0) throw Error(ErrorKind::InvalidInput, "sphere dimension must be positive");
  OptResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    auto rng = restart_rng(cfg.seed, r);
    const RestartOutcome run = descend(objective, to_real(random_unit_vector(dim, rng)), cfg);
    best.per_restart_values.push_back(run.value);
    best.total_iterations += run.iterations;
    if (run.value < best.value) {
      best.value = run.value;
      best.argmin = to_complex(run.x).normalized();
      best.converged = run.converged;
      best.iterations = run.iterations;
      best.grad_norm = run.grad_norm;
    }
  }
  // Report the objective exactly at the returned unit vector.
  best.value = objective(best.argmin);
  return best;
}

OptResult maximize_over_pure_states(const SphereObjective& objective, Eigen::Index dim,
                                    const OptConfig& cfg) {
  OptResult r = minimize_over_pure_states(
      [&objective](const ComplexVector& v) { return -objective(v); }, dim, cfg);
  r.value = -r.value;
  for (double& v : r.per_restart_values) v = -v;
  return r;
}

double sample_extremum(const SphereObjective& objective, Eigen::Index dim, int budget,
                       Extremum mode, std::uint64_t seed) {
  if (budget < 1) throw Error(ErrorKind::InvalidInput, "sample budget must be >= 1");
  std::mt19937_64 rng(seed);
  double best = mode == Extremum::min ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity();
  for (int i = 0; i < budget; ++i) {
    const double v = objective(random_unit_vector(dim, rng));
    best = mode == Extremum::min ? std::min(best, v) : std::max(best, v);
  }
  return best;
}

}  // namespace chanmetric
