#include <gtest/gtest.h>

#include <array>

#include "entroverify/error.hpp"
#include "entroverify/operator.hpp"
#include "entroverify/random.hpp"
#include "entroverify/states.hpp"
#include "test_support.hpp"

namespace ev = entroverify;
using ev::testing::max_abs_diff;

TEST(RandomPure, ScalarAndPurity) {
  EXPECT_NEAR(ev::random_pure(1, 3).matrix()(0, 0).real(), 1.0, 1e-15);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ev::Matrix m = ev::random_pure(4, seed).matrix();
    EXPECT_NEAR((m * m).trace().real(), 1.0, 1e-12);
  }
}

TEST(RandomPure, HaarMeanIsMaximallyMixed) {
  ev::Rng rng = ev::make_rng(2024);
  ev::Matrix mean = ev::Matrix::Zero(2, 2);
  const int n = 10000;
  for (int i = 0; i < n; ++i) mean += ev::random_pure(2, rng).matrix();
  mean /= n;
  const ev::DensityOperator avg(ev::HermitianOperator(mean, 1e-9));
  EXPECT_LT(ev::trace_distance(avg, ev::DensityOperator::maximally_mixed(2)), 0.02);
}

TEST(RandomDensity, RankOneIsPureAndFullRankMean) {
  const ev::Matrix p = ev::random_density(3, 1, 5).matrix();
  EXPECT_NEAR((p * p).trace().real(), 1.0, 1e-12);

  ev::Rng rng = ev::make_rng(77);
  ev::Matrix mean = ev::Matrix::Zero(2, 2);
  const int n = 10000;
  for (int i = 0; i < n; ++i) mean += ev::random_density(2, 2, rng).matrix();
  mean /= n;
  const ev::DensityOperator avg(ev::HermitianOperator(mean, 1e-9));
  EXPECT_LT(ev::trace_distance(avg, ev::DensityOperator::maximally_mixed(2)), 0.02);
}

TEST(RandomDensity, RejectsBadRank) {
  EXPECT_THROW(ev::random_density(2, 3, 1), ev::ValidationError);
  EXPECT_THROW(ev::random_density(2, 0, 1), ev::ValidationError);
}

TEST(RandomDensity, DeterministicPerSeed) {
  EXPECT_EQ(max_abs_diff(ev::random_density(3, 2, 42).matrix(),
                         ev::random_density(3, 2, 42).matrix()),
            0.0);
}

TEST(Purify, PureInputAppendsReference) {
  const ev::DensityOperator psi = ev::random_pure(2, 11);
  const ev::DensityOperator pur = ev::purify(psi);
  ev::CVector ref = ev::CVector::Zero(2);
  ref(0) = 1.0;
  const ev::Matrix expected = ev::kron(psi.matrix(), ref * ref.adjoint());
  EXPECT_LT(max_abs_diff(pur.matrix(), expected), 1e-12);
}

TEST(Purify, MaximallyMixedGivesEntangledState) {
  const ev::DensityOperator pur = ev::purify(ev::DensityOperator::maximally_mixed(2));
  EXPECT_LT(max_abs_diff(ev::trace_out_first(pur.op(), 2, 2).matrix(),
                         ev::Matrix::Identity(2, 2) * 0.5),
            1e-14);
  EXPECT_NEAR(ev::von_neumann_entropy(ev::trace_out_second(pur.op(), 2, 2)), 1.0, 1e-12);
}

TEST(Purify, RoundTrip) {
  const ev::DensityOperator rho = ev::random_density(3, 2, 19);
  const ev::DensityOperator pur = ev::purify(rho);
  const ev::Matrix& m = pur.matrix();
  EXPECT_NEAR((m * m).trace().real(), 1.0, 1e-12);
  EXPECT_LT(max_abs_diff(ev::trace_out_second(pur.op(), 3, 3).matrix(), rho.matrix()), 1e-10);
}

TEST(EqualMarginalPair, StrengthZeroGivesSameState) {
  for (auto method : {ev::MarginalMethod::mixture, ev::MarginalMethod::local_channel}) {
    const auto [rho, sigma] = ev::equal_marginal_pair(2, 3, method, 0.0, 5);
    EXPECT_LT(ev::trace_distance(rho, sigma), 1e-10);
  }
}

TEST(EqualMarginalPair, MarginalsAgree) {
  for (auto method : {ev::MarginalMethod::mixture, ev::MarginalMethod::local_channel}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto [rho, sigma] = ev::equal_marginal_pair(2, 2, method, 0.6, seed);
      EXPECT_LT(max_abs_diff(rho.marginal_b().matrix(), sigma.marginal_b().matrix()), 1e-10);
      EXPECT_GT(ev::trace_distance(rho, sigma), 0.0);
    }
  }
}

TEST(EqualMarginalPair, RejectsStrengthOutsideUnitInterval) {
  EXPECT_THROW(ev::equal_marginal_pair(2, 2, ev::MarginalMethod::mixture, 1.5, 1),
               ev::ValidationError);
  EXPECT_THROW(ev::parse_marginal_method("swap"), ev::ValidationError);
}

TEST(BuildDelta, ClassicalArithmetic) {
  const ev::BipartiteState rho(ev::HermitianOperator::diagonal({0.7, 0.3}), 2, 1);
  const ev::BipartiteState sigma(ev::HermitianOperator::diagonal({0.5, 0.5}), 2, 1);
  const ev::DeltaBundle d = ev::build_delta(rho, sigma);
  EXPECT_NEAR(d.eps, 0.2, 1e-15);
  EXPECT_LT(max_abs_diff(d.p.op().matrix(), ev::HermitianOperator::diagonal({1, 0}).matrix()),
            1e-14);
  EXPECT_LT(max_abs_diff(d.q.op().matrix(), ev::HermitianOperator::diagonal({0, 1}).matrix()),
            1e-14);
  EXPECT_LT(max_abs_diff(d.delta.op().matrix(),
                         ev::HermitianOperator::diagonal({0.7 / 1.2, 0.5 / 1.2}).matrix()),
            1e-14);
}

TEST(BuildDelta, BothExpressionsAgree) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto [rho, sigma] = ev::equal_marginal_pair(3, 2, ev::MarginalMethod::mixture, 0.4, seed);
    const ev::DeltaBundle d = ev::build_delta(rho, sigma);
    const ev::Matrix from_rho = (rho.op().matrix() + d.eps * d.q.op().matrix()) / (1.0 + d.eps);
    const ev::Matrix from_sigma =
        (sigma.op().matrix() + d.eps * d.p.op().matrix()) / (1.0 + d.eps);
    EXPECT_LT(max_abs_diff(d.delta.op().matrix(), from_rho), 1e-10);
    EXPECT_LT(max_abs_diff(d.delta.op().matrix(), from_sigma), 1e-10);
    EXPECT_NEAR(d.delta.op().trace(), 1.0, 1e-10);
    EXPECT_NEAR(d.eps, ev::trace_distance(rho, sigma), 1e-12);
  }
}

TEST(BuildDelta, ZeroDistanceIsAnError) {
  const ev::BipartiteState rho(ev::random_density(4, 4, 1).with_dims({2, 2}));
  EXPECT_THROW(ev::build_delta(rho, rho), ev::ValidationError);
}
