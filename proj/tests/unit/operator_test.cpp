#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "entroverify/error.hpp"
#include "entroverify/io.hpp"
#include "entroverify/operator.hpp"
#include "entroverify/random.hpp"
#include "entroverify/states.hpp"
#include "test_support.hpp"

namespace ev = entroverify;
using ev::testing::max_abs_diff;

TEST(HermitianOperator, RejectsAsymmetricMatrix) {
  ev::Matrix m = ev::Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(ev::HermitianOperator{m}, ev::ValidationError);
}

TEST(DensityOperator, RejectsNegativeEigenvalueAndBadTrace) {
  EXPECT_THROW(ev::DensityOperator(ev::HermitianOperator::diagonal({1.2, -0.2})),
               ev::ValidationError);
  EXPECT_THROW(ev::DensityOperator(ev::HermitianOperator::diagonal({0.5, 0.4})),
               ev::ValidationError);
  EXPECT_THROW(ev::DensityOperator(ev::HermitianOperator::identity(4) * 0.25, {2, 3}),
               ev::ValidationError);
}

TEST(EigHermitian, IdentityAndDiagonal) {
  const ev::Spectrum id = ev::eig_hermitian(ev::HermitianOperator::identity(3));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(id.values(i), 1.0, 1e-14);

  const ev::Spectrum s = ev::eig_hermitian(ev::HermitianOperator::diagonal({2.0, -1.0}));
  EXPECT_NEAR(s.values(0), 2.0, 1e-14);
  EXPECT_NEAR(s.values(1), -1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.vectors(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.vectors(1, 1)), 1.0, 1e-14);
}

TEST(EigHermitian, MatchesExtendedPrecisionOracle) {
  const auto oracle = ev::testing::oracle_values();
  const ev::DensityOperator rho = ev::load_state(ev::testing::tool_fixture("rho.json"));
  const ev::Spectrum s = ev::eig_hermitian(rho.op());
  const auto& expected = oracle["rho_eigenvalues"];
  ASSERT_EQ(s.values.size(), static_cast<long>(expected.size()));
  for (int i = 0; i < s.values.size(); ++i) {
    EXPECT_NEAR(s.values(i), expected[i].get<double>(), 1e-9);
  }
}

TEST(FracPower, IdentityAndSupportConvention) {
  const ev::HermitianOperator id = ev::HermitianOperator::identity(3);
  EXPECT_LT(max_abs_diff(ev::frac_power(id, 0.37).matrix(), id.matrix()), 1e-14);

  const ev::HermitianOperator h = ev::frac_power(ev::HermitianOperator::diagonal({4.0, 0.0}), 0.5);
  EXPECT_LT(max_abs_diff(h.matrix(), ev::HermitianOperator::diagonal({2.0, 0.0}).matrix()), 1e-14);

  // Negative powers act only on the support.
  const ev::HermitianOperator inv =
      ev::frac_power(ev::HermitianOperator::diagonal({0.25, 0.0}), -0.5);
  EXPECT_LT(max_abs_diff(inv.matrix(), ev::HermitianOperator::diagonal({2.0, 0.0}).matrix()),
            1e-13);
}

TEST(FracPower, MatchesExtendedPrecisionOracle) {
  const auto oracle = ev::testing::oracle_values()["sigma_power_minus_0_3"];
  const ev::DensityOperator sigma = ev::load_state(ev::testing::tool_fixture("sigma.json"));
  const ev::Matrix p = ev::frac_power(sigma.op(), -0.3).matrix();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_NEAR(p(i, j).real(), oracle["real"][i][j].get<double>(), 1e-9);
      EXPECT_NEAR(p(i, j).imag(), oracle["imag"][i][j].get<double>(), 1e-9);
    }
  }
}

TEST(FracPower, RejectsIndefiniteInput) {
  EXPECT_THROW(ev::frac_power(ev::HermitianOperator::diagonal({1.0, -0.5}), 0.5),
               ev::ValidationError);
}

TEST(PartialTrace, ProductState) {
  const ev::DensityOperator a = ev::random_density(2, 2, 1);
  const ev::DensityOperator b = ev::random_density(3, 3, 2);
  const ev::HermitianOperator ab = ev::kron(a.op(), b.op());
  EXPECT_LT(max_abs_diff(ev::trace_out_second(ab, 2, 3).matrix(), a.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(ev::trace_out_first(ab, 2, 3).matrix(), b.matrix()), 1e-14);
}

TEST(PartialTrace, MaximallyEntangledGivesMaximallyMixed) {
  const ev::HermitianOperator phi(ev::testing::bell_projector());
  EXPECT_LT(max_abs_diff(ev::trace_out_first(phi, 2, 2).matrix(),
                         ev::Matrix::Identity(2, 2) * 0.5),
            1e-15);
}

TEST(PartialTrace, MatchesBlockSums) {
  const ev::DensityOperator rho = ev::random_density(4, 4, 9);
  const ev::Matrix& m = rho.matrix();
  ev::Matrix by_hand = ev::Matrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a) {
    for (int a2 = 0; a2 < 2; ++a2) {
      for (int b = 0; b < 2; ++b) by_hand(a, a2) += m(2 * a + b, 2 * a2 + b);
    }
  }
  EXPECT_LT(max_abs_diff(ev::trace_out_second(rho.op(), 2, 2).matrix(), by_hand), 1e-15);
}

TEST(PartialTrace, TripartiteKeepsOrder) {
  const ev::DensityOperator a = ev::random_density(2, 2, 3);
  const ev::DensityOperator b = ev::random_density(3, 3, 4);
  const ev::DensityOperator c = ev::random_density(2, 2, 5);
  const ev::HermitianOperator abc = ev::kron(ev::kron(a.op(), b.op()), c.op());
  const std::array<int, 3> dims = {2, 3, 2};
  const std::array<int, 2> keep = {0, 2};
  const ev::HermitianOperator ac = ev::partial_trace(abc, dims, keep);
  EXPECT_LT(max_abs_diff(ac.matrix(), ev::kron(a.op(), c.op()).matrix()), 1e-14);
}

TEST(Kron, Examples) {
  EXPECT_LT(max_abs_diff(ev::kron(ev::HermitianOperator::identity(2),
                                  ev::HermitianOperator::identity(3))
                             .matrix(),
                         ev::Matrix::Identity(6, 6)),
            1e-15);
  const ev::HermitianOperator d = ev::kron(ev::HermitianOperator::diagonal({1.0, 0.0}),
                                           ev::HermitianOperator::diagonal({0.0, 1.0}));
  EXPECT_LT(max_abs_diff(d.matrix(), ev::HermitianOperator::diagonal({0.0, 1.0, 0.0, 0.0}).matrix()),
            1e-15);

  ev::Rng rng = ev::make_rng(17);
  const ev::Matrix ga = ev::ginibre(2, 2, rng);
  const ev::Matrix gb = ev::ginibre(3, 3, rng);
  const ev::HermitianOperator a(0.5 * (ga + ga.adjoint()));
  const ev::HermitianOperator b(0.5 * (gb + gb.adjoint()));
  EXPECT_LT(max_abs_diff(ev::trace_out_second(ev::kron(a, b), 2, 3).matrix(),
                         a.matrix() * b.trace()),
            1e-13);
}

TEST(TraceDistance, Examples) {
  const ev::DensityOperator rho = ev::random_density(3, 2, 8);
  EXPECT_NEAR(ev::trace_distance(rho, rho), 0.0, 1e-15);

  ev::CVector e0 = ev::CVector::Zero(2), e1 = ev::CVector::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  EXPECT_NEAR(ev::trace_distance(ev::DensityOperator::pure(e0), ev::DensityOperator::pure(e1)),
              1.0, 1e-15);

  const ev::DensityOperator p(ev::HermitianOperator::diagonal({0.7, 0.3}));
  EXPECT_NEAR(ev::trace_distance(p, ev::DensityOperator::maximally_mixed(2)), 0.2, 1e-15);
}

TEST(JordanDecompose, Examples) {
  const ev::JordanParts j = ev::jordan_decompose(ev::HermitianOperator::diagonal({0.2, -0.2}));
  EXPECT_LT(max_abs_diff(j.pos.matrix(), ev::HermitianOperator::diagonal({0.2, 0.0}).matrix()),
            1e-15);
  EXPECT_LT(max_abs_diff(j.neg.matrix(), ev::HermitianOperator::diagonal({0.0, 0.2}).matrix()),
            1e-15);
  EXPECT_NEAR(j.mass, 0.2, 1e-15);

  const ev::DensityOperator psd = ev::random_density(3, 3, 6);
  const ev::JordanParts k = ev::jordan_decompose(psd.op());
  EXPECT_LT(k.neg.matrix().cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(k.mass, 1.0, 1e-12);
}

TEST(JordanDecompose, InvariantsOnRandomDifference) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ev::DensityOperator rho = ev::random_density(4, 4, 100 + seed);
    const ev::DensityOperator sigma = ev::random_density(4, 2, 200 + seed);
    const ev::HermitianOperator diff = rho.op() - sigma.op();
    const ev::JordanParts j = ev::jordan_decompose(diff);
    EXPECT_LT((j.pos.matrix() * j.neg.matrix()).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT(max_abs_diff(j.pos.matrix() - j.neg.matrix(), diff.matrix()), 1e-10);
    EXPECT_NEAR(j.mass, ev::trace_distance(rho, sigma), 1e-12);
  }
}

TEST(VonNeumannEntropy, Examples) {
  EXPECT_NEAR(ev::von_neumann_entropy(ev::DensityOperator::maximally_mixed(4).op()), 2.0, 1e-14);
  EXPECT_NEAR(ev::von_neumann_entropy(ev::random_pure(3, 4).op()), 0.0, 1e-12);
}
