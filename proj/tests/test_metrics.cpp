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

#include <gtest/gtest.h>

#include <array>

#include "chanmetric/metrics.hpp"
#include "chanmetric/random.hpp"
#include "oracles.hpp"

namespace chanmetric {
namespace {

using oracle::diag;

const double kHalfSqrt2 = std::sqrt(0.5);

KrausChannel depolarizing() {
  const std::array<double, 4> w{0.25, 0.25, 0.25, 0.25};
  return pauli_channel(w);
}

ComplexMatrix phase_gate(double theta) { return diag({1, std::polar(1.0, theta)}); }

OptConfig quick(std::uint64_t seed = 0, int restarts = 6) {
  OptConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  return cfg;
}

double purified_fidelity(const KrausChannel& phi, const KrausChannel& psi, const ComplexVector& u) {
  return oracle::purified_fidelity(phi.kraus(), psi.kraus(), u);
}

TEST(StateMetrics, Examples) {
  Rng rng(41);
  const auto rho = DensityOperator::from_matrix(random_density(3, rng));
  const auto zero = DensityOperator::pure(oracle::ket(2, 0));
  const auto one = DensityOperator::pure(oracle::ket(2, 1));
  const auto mixed = DensityOperator::maximally_mixed(2);
  EXPECT_NEAR(state_fidelity(rho, rho), 1, 1e-12);
  EXPECT_NEAR(state_fidelity(zero, one), 0, 1e-12);
  EXPECT_NEAR(state_fidelity(zero, mixed), kHalfSqrt2, 1e-12);
  EXPECT_NEAR(trace_distance(rho, rho), 0, 1e-14);
  EXPECT_NEAR(trace_distance(zero, one), 1, 1e-14);
  EXPECT_NEAR(trace_distance(zero, mixed), 0.5, 1e-14);
  EXPECT_THROW(state_fidelity(rho, mixed), Error);
}

TEST(StateMetrics, AgreeWithOracleAndFuchsVanDeGraaf) {
  Rng rng(42);
  for (int t = 0; t < 500; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto rho = DensityOperator::from_matrix(random_density(n, rng, 1 + t % n));
    const auto sigma = DensityOperator::from_matrix(random_density(n, rng));
    const double f = state_fidelity(rho, sigma);
    const double d = trace_distance(rho, sigma);
    EXPECT_NEAR(f, state_fidelity(sigma, rho), 1e-9);
    EXPECT_NEAR(f, trace_sqrt_product(rho.matrix(), sigma.matrix()), 1e-12);
    EXPECT_NEAR(d, 0.5 * oracle::nuclear_norm(rho.matrix() - sigma.matrix()), 1e-12);
    EXPECT_GE(d - (1 - f), -1e-9);
    EXPECT_GE(std::sqrt(1 - f * f) - d, -1e-9);
  }
}

TEST(Bures, Examples) {
  EXPECT_EQ(bures_distance(1.0), 0);
  EXPECT_EQ(bures_distance(0.0), 1);
  EXPECT_NEAR(bures_distance(0.75), 0.5, 1e-15);
  EXPECT_NEAR(hellinger_channel_distance(0.75), 0.5, 1e-15);
  try {
    bures_distance(1.2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
  EXPECT_NEAR(bures_distance(DensityOperator::pure(oracle::ket(2, 0)), DensityOperator::maximally_mixed(2)),
              std::sqrt(1 - kHalfSqrt2), 1e-12);
}

TEST(EntangledFidelity, Examples) {
  Rng rng(43);
  const auto phi = random_channel(2, 3, 2, rng);
  EXPECT_NEAR(entangled_channel_fidelity(phi, phi), 1, 1e-9);
  const auto id = identity_channel(2);
  EXPECT_NEAR(entangled_channel_fidelity(id, unitary_channel(phase_gate(M_PI / 2))), kHalfSqrt2, 1e-12);
  EXPECT_NEAR(entangled_channel_fidelity(id, unitary_channel(oracle::sigma_z())), 0, 1e-7);
  const auto psi = random_channel(2, 3, 3, rng);
  EXPECT_NEAR(entangled_channel_fidelity(phi, psi), purified_fidelity(phi, psi, oracle::bell(2)), 1e-9);
  EXPECT_THROW(entangled_channel_fidelity(phi, id), Error);
}

TEST(PointwiseFidelity, Examples) {
  Rng rng(44);
  const auto phi = random_channel(2, 2, 3, rng);
  const auto mixed = DensityOperator::maximally_mixed(2);
  const auto id = identity_channel(2);
  const auto z = unitary_channel(oracle::sigma_z());
  EXPECT_NEAR(pointwise_minimax_fidelity(phi, phi, mixed), 1, 1e-9);
  EXPECT_NEAR(pointwise_minimax_fidelity(id, z, DensityOperator::pure(oracle::ket(2, 0))), 1, 1e-9);
  EXPECT_NEAR(pointwise_minimax_fidelity(id, z, mixed), 0, 1e-7);
  EXPECT_NEAR(hellinger_pointwise_distance(id, z, mixed), 1, 1e-7);
  EXPECT_NEAR(hellinger_pointwise_distance(phi, phi, mixed), 0, 1e-9);
}

TEST(PointwiseFidelity, TransposedStateMatchesPurification) {
  Rng rng(45);
  int branch_differs = 0;
  for (int t = 0; t < 20; ++t) {
    const Eigen::Index n = 2 + t % 2;
    const auto phi = random_channel(2, n, 2, rng);
    const auto psi = random_channel(2, n, 3, rng);
    const ComplexVector u = random_unit_vector(4, rng);
    const ComplexMatrix rho = reduced_state(u, 2);
    const double expected = purified_fidelity(phi, psi, u);
    EXPECT_NEAR(pointwise_minimax_fidelity(phi, psi, DensityOperator::from_matrix(rho)), expected, 1e-8);
    // The untransposed branch (state entering as rho rather than rho^T) does not.
    const double other = pointwise_minimax_fidelity(phi, psi, DensityOperator::from_matrix(rho.transpose()));
    if (std::abs(other - expected) > 1e-4) ++branch_differs;
    // Stinespring form at the same state.
    EXPECT_NEAR(trace_norm(stinespring_overlap(phi, psi, rho)), expected, 1e-8);
  }
  EXPECT_GT(branch_differs, 10);
}

TEST(PointwiseFidelity, HellingerIsOneMinusFidelityForChannels) {
  Rng rng(46);
  for (int t = 0; t < 20; ++t) {
    const auto phi = random_channel(2, 3, 2, rng);
    const auto psi = random_channel(2, 3, 2, rng);
    const auto rho = DensityOperator::from_matrix(random_density(2, rng));
    EXPECT_NEAR(hellinger_pointwise_distance(phi, psi, rho), 1 - pointwise_minimax_fidelity(phi, psi, rho),
                1e-9);
  }
}

TEST(ReducedState, IsPartialTraceOfProjector) {
  Rng rng(47);
  const ComplexVector u = random_unit_vector(9, rng);
  const ComplexMatrix expected = oracle::trace_second(u * u.adjoint(), 3, 3);
  EXPECT_LT((reduced_state(u, 3) - expected).norm(), 1e-14);
}

TEST(Minimax, Examples) {
  Rng rng(48);
  const auto phi = random_channel(2, 2, 2, rng);
  const auto id = identity_channel(2);
  const auto s = unitary_channel(phase_gate(M_PI / 2));
  for (Route route : {Route::density, Route::purification, Route::stinespring}) {
    EXPECT_NEAR(minimax_fidelity(phi, phi, route, quick()).value, 1, 1e-6) << to_string(route);
    const auto r = minimax_fidelity(id, s, route, quick());
    EXPECT_NEAR(r.value, kHalfSqrt2, 1e-6) << to_string(route);
    EXPECT_EQ(r.route, route);
    EXPECT_NEAR(r.minimizer.norm(), 1, 1e-12);
    EXPECT_NEAR(r.value, minimax_objective(id, s, route)(r.minimizer), 1e-9);
    EXPECT_NEAR(minimax_fidelity(id, depolarizing(), route, quick()).value, 0.5, 1e-6) << to_string(route);
  }
}

// For id versus the fully depolarizing channel the infimum needs a mixed
// input on g: every pure input gives 1/sqrt(2), the maximally mixed one 1/2.
TEST(Minimax, PureInputsOnInputSpaceAreNotEnough) {
  const auto id = identity_channel(2);
  const auto dep = depolarizing();
  const SphereObjective on_g = [&](const ComplexVector& psi) {
    return pointwise_minimax_fidelity(id, dep, DensityOperator::pure(psi));
  };
  EXPECT_NEAR(minimize_over_pure_states(on_g, 2, quick()).value, kHalfSqrt2, 1e-9);
  EXPECT_NEAR(pointwise_minimax_fidelity(id, dep, DensityOperator::maximally_mixed(2)), 0.5, 1e-9);
}

TEST(Minimax, NeverAboveSampledOracle) {
  Rng rng(49);
  for (int t = 0; t < 5; ++t) {
    const auto phi = random_channel(2, 2, 2, rng);
    const auto psi = random_channel(2, 2, 2, rng);
    const auto objective = minimax_objective(phi, psi, Route::purification);
    const double sampled = sample_extremum(objective, 4, 3000, Extremum::min, t);
    EXPECT_LE(minimax_fidelity(phi, psi, Route::purification, quick(t)).value, sampled + 1e-9);
  }
}

TEST(Minimax, RoutesAgree) {
  Rng rng(50);
  for (int t = 0; t < 16; ++t) {
    const Eigen::Index n = 2 + t % 2;
    const auto phi = random_channel(2, n, 1 + t % 3, rng);
    const auto psi = random_channel(2, n, 2, rng);
    const double d = minimax_fidelity(phi, psi, Route::density, quick(t)).value;
    const double p = minimax_fidelity(phi, psi, Route::purification, quick(t)).value;
    const double s = minimax_fidelity(phi, psi, Route::stinespring, quick(t)).value;
    EXPECT_NEAR(d, p, 1e-4);
    EXPECT_NEAR(p, s, 1e-4);
    EXPECT_GE(p, -1e-9);
    EXPECT_LE(p, 1 + 1e-9);
  }
}

TEST(Minimax, OperationsAreFlaggedInDiagnostics) {
  const auto op = make_channel({0.8 * ComplexMatrix::Identity(2, 2)}, false);
  const auto r = minimax_fidelity(op, identity_channel(2), Route::purification, quick());
  EXPECT_FALSE(r.diagnostics.trace_preserving);
  EXPECT_NEAR(r.value, 0.8, 1e-6);
  EXPECT_EQ(r.diagnostics.restarts, 6);
  EXPECT_EQ(r.diagnostics.per_restart_values.size(), 6u);
}

TEST(Minimax, RejectsMismatchedChannelsAndRoutes) {
  EXPECT_THROW(minimax_fidelity(identity_channel(2), identity_channel(3), Route::density, quick()), Error);
  try {
    parse_route("diamond");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RouteUnavailable);
  }
  EXPECT_EQ(parse_route("stinespring"), Route::stinespring);
}

TEST(CbDistance, Examples) {
  Rng rng(51);
  const auto phi = random_channel(2, 2, 2, rng);
  const auto id = identity_channel(2);
  EXPECT_NEAR(cb_distance(phi, phi, quick()).value, 0, 1e-9);
  EXPECT_NEAR(cb_distance(id, unitary_channel(oracle::sigma_z()), quick()).value, 1, 1e-6);
  EXPECT_NEAR(cb_distance(id, unitary_channel(phase_gate(M_PI / 2)), quick()).value, kHalfSqrt2, 1e-6);
  const auto r = maximize_over_pure_states(cb_objective(id, unitary_channel(oracle::sigma_z())), 4, quick());
  EXPECT_NEAR(r.value, 1, 1e-6);
}

TEST(ChannelBounds, FidelityVersusCbDistance) {
  Rng rng(52);
  for (int t = 0; t < 12; ++t) {
    const auto phi = random_channel(2, 2, 1 + t % 3, rng);
    const auto psi = random_channel(2, 2, 2, rng);
    const double f = minimax_fidelity(phi, psi, Route::purification, quick(t)).value;
    const double d = cb_distance(phi, psi, quick(t)).value;
    EXPECT_GE(f - (1 - d), -1e-3);
    EXPECT_GE(std::sqrt(std::max(0.0, 1 - d * d)) - f, -1e-3);
    // Weak bound against the entangled-state fidelity.
    EXPECT_GE(d - (1 - entangled_channel_fidelity(phi, psi)), -1e-3);
  }
}

TEST(ChannelBounds, UnitaryPairsSaturate) {
  Rng rng(53);
  for (int t = 0; t < 6; ++t) {
    const auto u = unitary_channel(random_unitary(2, rng));
    const auto v = unitary_channel(random_unitary(2, rng));
    const double f = minimax_fidelity(u, v, Route::purification, quick(t)).value;
    const double d = cb_distance(u, v, quick(t)).value;
    EXPECT_NEAR(f, std::sqrt(1 - d * d), 1e-4);
  }
}

TEST(ChannelBounds, EntangledFidelityAgainstIdentity) {
  Rng rng(54);
  const auto id = identity_channel(2);
  for (int t = 0; t < 12; ++t) {
    const auto phi = random_channel(2, 2, 1 + t % 4, rng);
    const double big_f = entangled_channel_fidelity(phi, id);
    const double d = cb_distance(phi, id, quick(t)).value;
    EXPECT_GE(big_f - (1 - d), -1e-3);
    EXPECT_GE(std::sqrt(1 - 0.25 * d * d) - big_f, -1e-3);
  }
}

TEST(Properties, StrongConcavity) {
  Rng rng(55);
  for (int t = 0; t < 6; ++t) {
    const auto p = random_probabilities(2, rng), q = random_probabilities(2, rng);
    std::vector<KrausChannel> phis{random_channel(2, 2, 2, rng), random_channel(2, 2, 1, rng)};
    std::vector<KrausChannel> psis{random_channel(2, 2, 2, rng), random_channel(2, 2, 2, rng)};
    double rhs = 0;
    for (int i = 0; i < 2; ++i) {
      rhs += std::sqrt(p[i] * q[i]) * minimax_fidelity(phis[i], psis[i], Route::purification, quick(t)).value;
    }
    const double lhs =
        minimax_fidelity(mixture_channel(p, phis), mixture_channel(q, psis), Route::purification, quick(t)).value;
    EXPECT_GE(lhs, rhs - 1e-3);
  }
}

TEST(Properties, UnitaryInvarianceAndMonotonicity) {
  Rng rng(56);
  for (int t = 0; t < 6; ++t) {
    const auto phi = random_channel(2, 2, 2, rng);
    const auto psi = random_channel(2, 2, 2, rng);
    const double f = minimax_fidelity(phi, psi, Route::purification, quick(t)).value;
    const auto pre = unitary_channel(random_unitary(2, rng));
    const auto post = unitary_channel(random_unitary(2, rng));
    const double rotated = minimax_fidelity(compose(post, compose(phi, pre)), compose(post, compose(psi, pre)),
                                            Route::purification, quick(t))
                               .value;
    EXPECT_NEAR(rotated, f, 1e-4);
    const auto xi = random_channel(2, 2, 2, rng);
    EXPECT_GE(minimax_fidelity(compose(phi, xi), compose(psi, xi), Route::purification, quick(t)).value,
              f - 1e-3);
    EXPECT_GE(minimax_fidelity(compose(xi, phi), compose(xi, psi), Route::purification, quick(t)).value,
              f - 1e-3);
  }
}

TEST(Properties, StinespringHomogeneity) {
  Rng rng(57);
  for (int t = 0; t < 5; ++t) {
    const auto phi = random_channel(2, 2, 2, rng);
    const auto psi = random_channel(2, 2, 3, rng);
    const ComplexMatrix rho = reduced_state(random_unit_vector(4, rng), 2);
    const ComplexMatrix m = stinespring_overlap(phi, psi, rho);
    const double norm = trace_norm(m);
    // Polar unitary: U M = |M| gives Re Tr(U M) = |Tr(U M)| = ||M||_1.
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix polar = svd.matrixV() * svd.matrixU().adjoint();
    double sup_abs = std::abs((polar * m).trace()), sup_re = (polar * m).trace().real();
    for (int i = 0; i < 2000; ++i) {
      const ComplexMatrix u = random_unitary(m.rows(), rng);
      sup_abs = std::max(sup_abs, std::abs((u * m).trace()));
      sup_re = std::max(sup_re, (u * m).trace().real());
    }
    EXPECT_NEAR(sup_abs, sup_re, 1e-6);
    EXPECT_NEAR(sup_abs, norm, 1e-6);
    EXPECT_NEAR(trace_norm(stinespring_overlap(phi, psi, 3.0 * rho)), 3 * norm, 1e-9);
  }
}

TEST(EffectFidelity, Examples) {
  Rng rng(58);
  const ComplexMatrix one = ComplexMatrix::Identity(2, 2), zero = ComplexMatrix::Zero(2, 2);
  const auto rho = DensityOperator::from_matrix(random_density(2, rng));
  EXPECT_NEAR(effect_fidelity_distance(one, one, rho), 0, 1e-9);
  EXPECT_NEAR(effect_fidelity_distance(one, zero, rho), 0.5, 1e-9);
  EXPECT_NEAR(effect_distance_sup(one, zero, quick()).value, 0.5, 1e-9);
  try {
    effect_fidelity_distance(2.0 * one, one, rho);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEffect);
  }
}

TEST(EffectFidelity, MatchesFactorizedOracle) {
  Rng rng(59);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_psd(2, rng), b = random_psd(2, rng);
    const ComplexMatrix e = a / (hermitian_eig(a).eigenvalues(0) * 1.01);
    const ComplexMatrix f = b / (hermitian_eig(b).eigenvalues(0) * 1.01);
    const auto rho = DensityOperator::from_matrix(random_density(2, rng));
    const ComplexMatrix& r = rho.matrix();
    const double expected = 0.5 * ((e + f) * r).trace().real() -
                            oracle::nuclear_norm(oracle::sqrtm(f) * r * oracle::sqrtm(e));
    EXPECT_NEAR(effect_fidelity_distance(e, f, rho), expected, 1e-8);
    const auto mixed = DensityOperator::maximally_mixed(2);
    EXPECT_NEAR(effect_fidelity_distance(e, f, mixed),
                0.25 * (e + f).trace().real() - 0.5 * oracle::fidelity(e, f), 1e-8);
    const double sup = effect_distance_sup(e, f, quick(t, 4)).value;
    EXPECT_GE(sup, effect_fidelity_distance(e, f, rho) - 1e-9);
  }
}

}  // namespace
}  // namespace chanmetric
