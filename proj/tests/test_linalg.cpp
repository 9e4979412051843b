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

#include "chanmetric/linalg.hpp"
#include "chanmetric/random.hpp"
#include "oracles.hpp"

namespace chanmetric {
namespace {

using oracle::diag;

TEST(HermitianEig, IdentityAndDiagonal) {
  auto e = hermitian_eig(ComplexMatrix::Identity(2, 2));
  EXPECT_NEAR(e.eigenvalues(0), 1, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), 1, 1e-15);

  e = hermitian_eig(diag({-1, 3}));
  EXPECT_NEAR(e.eigenvalues(0), 3, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), -1, 1e-15);
}

TEST(HermitianEig, ReconstructsRandomHermitian) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_hermitian(4, rng);
    const auto e = hermitian_eig(a);
    const ComplexMatrix& v = e.eigenvectors;
    EXPECT_LT((v * e.eigenvalues.asDiagonal() * v.adjoint() - a).norm(), 1e-10 * a.norm());
    EXPECT_LT((v.adjoint() * v - ComplexMatrix::Identity(4, 4)).norm(), 1e-10);
    for (Eigen::Index i = 1; i < 4; ++i) EXPECT_GE(e.eigenvalues(i - 1), e.eigenvalues(i));
  }
}

TEST(HermitianEig, RejectsBadInput) {
  ComplexMatrix m = diag({1, 2});
  m(0, 1) = 1;
  try {
    hermitian_eig(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHermitian);
  }
  try {
    hermitian_eig(ComplexMatrix::Zero(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(PsdSqrt, Examples) {
  EXPECT_LT((psd_sqrt(ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(3, 3)).norm(), 1e-14);
  EXPECT_LT((psd_sqrt(diag({4, 9})) - diag({2, 3})).norm(), 1e-14);
}

TEST(PsdSqrt, SquaresBack) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix c = random_gaussian(3, 3, rng);
    const ComplexMatrix a = c.adjoint() * c;
    const ComplexMatrix r = psd_sqrt(a);
    EXPECT_LT((r * r - a).norm(), 1e-9 * a.norm());
    EXPECT_GE(hermitian_eig(r).eigenvalues(2), 0);
  }
}

TEST(PsdSqrt, ClipsRoundoffAndRejectsNegative) {
  EXPECT_NEAR(psd_sqrt(diag({1, -1e-10})).norm(), 1, 1e-15);
  try {
    psd_sqrt(diag({1, -1e-3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPSD);
  }
}

TEST(TraceNorm, Examples) {
  EXPECT_NEAR(trace_norm(diag({1, -2})), 3, 1e-14);
  EXPECT_NEAR(trace_norm(oracle::outer(oracle::ket(2, 0), oracle::ket(2, 1))), 1, 1e-14);
  EXPECT_EQ(trace_norm(ComplexMatrix::Zero(3, 3)), 0);
}

TEST(TraceNorm, MetricProperties) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = random_gaussian(3, 3, rng);
    const ComplexMatrix b = random_gaussian(3, 3, rng);
    const ComplexMatrix c = random_gaussian(3, 3, rng);
    EXPECT_LT(trace_norm(a - a), 1e-14);
    EXPECT_GT(trace_norm(a - b), 1e-3);
    EXPECT_LE(trace_norm(a - c), trace_norm(a - b) + trace_norm(b - c) + 1e-12);
    EXPECT_NEAR(trace_norm(a), oracle::nuclear_norm(a), 1e-10);
  }
}

TEST(PartialTrace, Examples) {
  Rng rng(4);
  const ComplexMatrix rho = random_density(2, rng);
  const ComplexMatrix sigma = 2.5 * random_density(3, rng);
  EXPECT_LT((partial_trace(kron(rho, sigma), 2, 3, Subsystem::second) - 2.5 * rho).norm(), 1e-12);
  EXPECT_LT((partial_trace(kron(rho, sigma), 2, 3, Subsystem::first) - sigma).norm(), 1e-12);

  const ComplexVector b = oracle::bell(2);
  EXPECT_LT((partial_trace(ComplexMatrix(b * b.adjoint()), 2, 2, Subsystem::second) -
             ComplexMatrix::Identity(2, 2) / 2)
                .norm(),
            1e-14);
  EXPECT_LT((partial_trace(ComplexMatrix::Identity(4, 4), 2, 2, Subsystem::first) -
             2 * ComplexMatrix::Identity(2, 2))
                .norm(),
            1e-14);
}

TEST(PartialTrace, MatchesIndexSumsAndDuality) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix m = random_gaussian(6, 6, rng);
    const ComplexMatrix r2 = partial_trace(m, 2, 3, Subsystem::second);
    EXPECT_LT((r2 - oracle::trace_second(m, 2, 3)).norm(), 1e-12);
    EXPECT_LT((partial_trace(m, 2, 3, Subsystem::first) - oracle::trace_first(m, 2, 3)).norm(), 1e-12);
    const ComplexMatrix rho = random_gaussian(2, 2, rng);
    const Complex lhs = transpose_pairing(r2, rho);
    const Complex rhs = transpose_pairing(m, kron(rho, ComplexMatrix::Identity(3, 3)));
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
  }
  try {
    partial_trace(ComplexMatrix::Identity(5, 5), 2, 3, Subsystem::second);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Kron, FirstFactorIsSlow) {
  const ComplexMatrix a = diag({1, 2});
  const ComplexMatrix b = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
  EXPECT_LT((kron(a, b) - oracle::kron(a, b)).norm(), 1e-15);
}

TEST(TransposePairing, Examples) {
  const ComplexMatrix e01 = oracle::outer(oracle::ket(2, 0), oracle::ket(2, 1));
  EXPECT_NEAR(std::abs(transpose_pairing(e01, e01) - Complex(1)), 0, 1e-15);
  Rng rng(6);
  const ComplexMatrix rho = random_gaussian(3, 3, rng);
  EXPECT_LT(std::abs(transpose_pairing(ComplexMatrix::Identity(3, 3), rho) - rho.trace()), 1e-14);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix b = random_gaussian(3, 3, rng);
    const ComplexMatrix r = random_gaussian(3, 3, rng);
    EXPECT_LT(std::abs(transpose_pairing(b, r) - (b.transpose() * r).trace()), 1e-12);
    EXPECT_LT(std::abs(transpose_pairing(b, r) - (b * r.transpose()).trace()), 1e-12);
  }
}

TEST(TraceSqrtProduct, Examples) {
  EXPECT_NEAR(trace_sqrt_product(ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(3, 3)), 3, 1e-14);
  EXPECT_NEAR(trace_sqrt_product(diag({1, 0}), diag({0, 1})), 0, 1e-14);
  EXPECT_NEAR(trace_sqrt_product(diag({4, 1}), diag({1, 4})), 4, 1e-14);
}

TEST(TraceSqrtProduct, SymmetricAndMatchesOracle) {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = 2 + t % 3;
    // R = G G^H of rank <= n, so Tr sqrt(RS) = || S^{1/2} G ||_1 without
    // taking the root of a singular matrix.
    const ComplexMatrix g = random_gaussian(n, 1 + t % n, rng);
    const ComplexMatrix r = g * g.adjoint();
    const ComplexMatrix s = random_psd(n, rng);
    const double f = trace_sqrt_product(r, s);
    EXPECT_NEAR(f, trace_sqrt_product(s, r), 1e-9 * (1 + f));
    EXPECT_NEAR(f, oracle::nuclear_norm(oracle::sqrtm(s) * g), 1e-9 * (1 + f));
    EXPECT_GE(f, 0);
  }
}

// Nearly orthogonal operands: the product is tiny next to its factors, and
// its roundoff must not be mistaken for negativity.
TEST(TraceSqrtProduct, NearlyOrthogonalLargeOperands) {
  Rng rng(10);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix u = random_unitary(3, rng);
    for (double offset : {0.0, 1e-3}) {
      const ComplexVector a = u.col(0) + offset * u.col(1);
      const ComplexMatrix r = 1e4 * a * a.adjoint();
      const ComplexMatrix s = 1e4 * (u.col(1) * u.col(1).adjoint() + u.col(2) * u.col(2).adjoint());
      EXPECT_NEAR(trace_sqrt_product(r, s), 1e4 * offset, 1e-6 * (1 + 1e4 * offset));
    }
  }
}

// sup over unitaries U of 2 Re Tr(R^{1/2} U S^{1/2}) equals 2 Tr sqrt(RS).
double unitary_pairing(const ComplexMatrix& rr, const ComplexMatrix& ss, const ComplexMatrix& u) {
  return 2 * (rr * u * ss).trace().real();
}

TEST(TraceSqrtProduct, SampledUnitarySupremum) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const Eigen::Index n = 2 + t % 2;
    const ComplexMatrix r = random_psd(n, rng), s = random_psd(n, rng);
    const ComplexMatrix rr = oracle::sqrtm(r), ss = oracle::sqrtm(s);
    const double bound = 2 * trace_sqrt_product(r, s);
    double best = -1e300;
    ComplexMatrix best_u;
    for (int i = 0; i < 5000; ++i) {
      const ComplexMatrix u = random_unitary(n, rng);
      const double v = unitary_pairing(rr, ss, u);
      EXPECT_LE(v, bound + 1e-9);
      if (v > best) best = v, best_u = u;
    }
    // Local search U <- U exp(i delta H).
    double delta = 0.3;
    for (int i = 0; i < 4000 && bound - best > 1e-4; ++i) {
      const ComplexMatrix h = random_hermitian(n, rng);
      const ComplexMatrix step = (Complex(0, delta) * h / h.norm()).exp();
      const ComplexMatrix cand = best_u * step;
      const double v = unitary_pairing(rr, ss, cand);
      if (v > best) {
        best = v, best_u = cand;
      } else if (i % 20 == 19) {
        delta *= 0.7;
        if (delta < 1e-4) delta = 0.3;
      }
    }
    EXPECT_LE(best, bound + 1e-9);
    EXPECT_LT(bound - best, 1e-3);
  }
}

TEST(ExtendedSqrtProduct, TraceAndSquare) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_psd(3, rng), b = random_psd(3, rng);
    const ComplexMatrix x = extended_sqrt_product(a, b);
    EXPECT_NEAR(x.trace().real(), trace_sqrt_product(a, b), 1e-8);
    EXPECT_NEAR(x.trace().imag(), 0, 1e-8);
    EXPECT_LT((x * x - a * b).norm(), 1e-7 * (a * b).norm());
  }
  // Rank-deficient A: the root vanishes on ker A.
  const ComplexMatrix a = diag({1, 0});
  const ComplexMatrix x = extended_sqrt_product(a, ComplexMatrix::Identity(2, 2));
  EXPECT_LT((x - a).norm(), 1e-12);
}

TEST(DensityOperator, Validation) {
  EXPECT_NO_THROW(DensityOperator::from_matrix(diag({0.25, 0.75})));
  const auto expect_kind = [](const ComplexMatrix& m, ErrorKind kind) {
    try {
      DensityOperator::from_matrix(m);
      ADD_FAILURE() << "accepted " << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind);
    }
  };
  expect_kind(diag({0.5, 0.6}), ErrorKind::InvalidInput);
  expect_kind(diag({1.5, -0.5}), ErrorKind::NotPSD);
  ComplexMatrix m = diag({0.5, 0.5});
  m(0, 1) = 0.3;
  expect_kind(m, ErrorKind::NonHermitian);

  const auto psi = DensityOperator::pure(oracle::ket(3, 1) * 2.0);
  EXPECT_NEAR(psi.matrix()(1, 1).real(), 1, 1e-15);
  EXPECT_LT((DensityOperator::maximally_mixed(2).matrix() - diag({0.5, 0.5})).norm(), 1e-15);
}

}  // namespace
}  // namespace chanmetric
