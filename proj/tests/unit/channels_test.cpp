#include <gtest/gtest.h>

#include <cmath>

#include "entroverify/channels.hpp"
#include "entroverify/error.hpp"
#include "entroverify/random.hpp"
#include "entroverify/states.hpp"
#include "test_support.hpp"

namespace ev = entroverify;
using ev::testing::max_abs_diff;

namespace {

double kraus_completeness_error(const ev::QuantumChannel& n) {
  ev::Matrix s = ev::Matrix::Zero(n.dim_in(), n.dim_in());
  for (const ev::Matrix& k : n.kraus()) s += k.adjoint() * k;
  return max_abs_diff(s, ev::Matrix::Identity(n.dim_in(), n.dim_in()));
}

// Trace distance of the outputs on the maximally entangled input.
double choi_distance(const ev::QuantumChannel& n, const ev::QuantumChannel& m) {
  return ev::half_trace_norm(n.choi() - m.choi());
}

}  // namespace

TEST(QuantumChannel, RejectsNonTracePreservingKraus) {
  std::vector<ev::Matrix> k = {ev::Matrix::Identity(2, 2) * 0.9};
  EXPECT_THROW(ev::QuantumChannel{k}, ev::ValidationError);
  std::vector<ev::Matrix> mixed = {ev::Matrix::Identity(2, 2), ev::Matrix::Identity(3, 2)};
  EXPECT_THROW(ev::QuantumChannel{mixed}, ev::ValidationError);
}

TEST(QuantumChannel, ChoiInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ev::QuantumChannel n = ev::random_channel(2 + seed % 2, 2 + seed % 3, seed);
    const ev::HermitianOperator& c = n.choi();
    EXPECT_NEAR(c.trace(), 1.0, 1e-9);
    EXPECT_GE(ev::eig_hermitian(c).values.minCoeff(), -1e-9);
    const ev::HermitianOperator marg = ev::trace_out_first(c, n.dim_out(), n.dim_in());
    EXPECT_LT(max_abs_diff(marg.matrix(),
                           ev::Matrix::Identity(n.dim_in(), n.dim_in()) / double(n.dim_in())),
              1e-9);
  }
}

TEST(QuantumChannel, RandomChannelsAreTracePreserving) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ev::QuantumChannel n = ev::random_channel(2 + seed % 3, 2 + (seed / 3) % 3, seed);
    ASSERT_LT(kraus_completeness_error(n), 1e-9) << "seed " << seed;
  }
}

TEST(QuantumChannel, ChoiKrausRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ev::QuantumChannel n = ev::random_channel(3, 2, 40 + seed);
    const auto k = ev::choi_to_kraus(n.choi(), 3, 2);
    EXPECT_LT(max_abs_diff(ev::kraus_to_choi(k, 3, 2).matrix(), n.choi().matrix()), 1e-8);
    const ev::QuantumChannel back = ev::channel_from_choi(n.choi(), 3, 2);
    EXPECT_LT(max_abs_diff(back.choi().matrix(), n.choi().matrix()), 1e-8);
  }
}

TEST(Apply, StandardChannels) {
  const ev::DensityOperator rho = ev::random_density(3, 3, 5);
  EXPECT_LT(max_abs_diff(ev::identity_channel(3).apply(rho).matrix(), rho.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(ev::randomizing(3, 2).apply(rho).matrix(),
                         ev::Matrix::Identity(2, 2) * 0.5),
            1e-14);
  const ev::DensityOperator sigma = ev::random_density(2, 2, 6);
  EXPECT_LT(max_abs_diff(ev::replacer(sigma, 3).apply(rho).matrix(), sigma.matrix()), 1e-14);

  ev::CVector e0 = ev::CVector::Zero(2);
  e0(0) = 1.0;
  EXPECT_LT(max_abs_diff(ev::randomizing(2, 2).apply(ev::DensityOperator::pure(e0)).matrix(),
                         ev::Matrix::Identity(2, 2) * 0.5),
            1e-14);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ev::DensityOperator s = ev::random_density(3, 2, 70 + seed);
    EXPECT_LT(max_abs_diff(ev::depolarizing(3, 0.0).apply(s).matrix(), s.matrix()), 1e-12);
  }
}

TEST(ExtendApply, IdentityProductAndMarginal) {
  const ev::DensityOperator rho = ev::random_density(6, 6, 8).with_dims({2, 3});
  EXPECT_LT(max_abs_diff(ev::identity_channel(2).extend_apply(rho).matrix(), rho.matrix()), 1e-14);

  const ev::QuantumChannel n = ev::random_channel(2, 3, 9);
  const ev::DensityOperator a = ev::random_density(2, 2, 10);
  const ev::DensityOperator r = ev::random_density(3, 3, 11);
  const ev::DensityOperator prod(ev::kron(a.op(), r.op()), {2, 3});
  EXPECT_LT(max_abs_diff(n.extend_apply(prod).matrix(), ev::kron(n.apply(a).matrix(), r.matrix())),
            1e-13);

  const ev::DensityOperator out = n.extend_apply(rho);
  EXPECT_LT(max_abs_diff(ev::trace_out_first(out.op(), 3, 3).matrix(),
                         ev::trace_out_first(rho.op(), 2, 3).matrix()),
            1e-10);
}

TEST(ChannelAlgebra, TensorAndMixture) {
  const ev::QuantumChannel n = ev::random_channel(2, 2, 12);
  const ev::QuantumChannel m = ev::random_channel(2, 3, 13);
  const ev::QuantumChannel nm = ev::tensor(n, m);
  EXPECT_EQ(nm.dim_in(), 4);
  EXPECT_EQ(nm.dim_out(), 6);
  const ev::DensityOperator a = ev::random_density(2, 2, 14);
  const ev::DensityOperator b = ev::random_density(2, 2, 15);
  EXPECT_LT(max_abs_diff(nm.apply(ev::DensityOperator(ev::kron(a.op(), b.op()))).matrix(),
                         ev::kron(n.apply(a).matrix(), m.apply(b).matrix())),
            1e-13);

  const ev::QuantumChannel mix = ev::mixture(n, ev::identity_channel(2), 0.3);
  EXPECT_LT(max_abs_diff(mix.apply(a).matrix(), 0.7 * n.apply(a).matrix() + 0.3 * a.matrix()),
            1e-12);
  EXPECT_LT(kraus_completeness_error(mix), 1e-9);
}

TEST(DiamondDistance, SameChannelIsZero) {
  const ev::QuantumChannel n = ev::random_channel(2, 2, 16);
  const ev::DiamondBracket b = ev::diamond_distance(n, n);
  EXPECT_NEAR(b.lower, 0.0, 1e-9);
  EXPECT_NEAR(b.upper, 0.0, 1e-9);
  EXPECT_NEAR(ev::channel_trace_distance(n, n), 0.0, 1e-12);
}

TEST(DiamondDistance, IdentityVersusDepolarizing) {
  ev::Rng rng = ev::make_rng(99);
  for (double p : {0.2, 0.5}) {
    const ev::QuantumChannel id = ev::identity_channel(2);
    const ev::QuantumChannel dep = ev::depolarizing(2, p);
    const ev::DiamondBracket b = ev::diamond_distance(id, dep);
    EXPECT_TRUE(b.converged);
    const double at_phi = choi_distance(id, dep);
    EXPECT_LE(b.lower, at_phi + 1e-9);
    EXPECT_GE(b.upper, at_phi - 1e-9);
    // Multistart oracle: no random pure two-qubit input beats the bracket.
    for (int k = 0; k < 1000; ++k) {
      const ev::DensityOperator psi(ev::DensityOperator::pure(ev::haar_vector(4, rng), {2, 2}));
      const double t = ev::trace_distance(id.extend_apply(psi), dep.extend_apply(psi));
      ASSERT_LE(t, b.upper + 1e-9);
    }
  }
}

TEST(DiamondDistance, PauliChannels) {
  const std::array<double, 4> p = {0.7, 0.1, 0.1, 0.1};
  const std::array<double, 4> q = {0.4, 0.3, 0.2, 0.1};
  double expected = 0.0;
  for (int i = 0; i < 4; ++i) expected += std::abs(p[i] - q[i]) / 2.0;
  const ev::DiamondBracket b = ev::diamond_distance(ev::pauli_channel(p), ev::pauli_channel(q));
  EXPECT_LE(b.lower, expected + 1e-7);
  EXPECT_GE(b.upper, expected - 1e-7);
  EXPECT_LT(b.upper - b.lower, 1e-6);
}

TEST(DiamondDistance, ReplacersReduceToTraceDistance) {
  const ev::DensityOperator s = ev::random_density(2, 2, 17);
  const ev::DensityOperator t = ev::random_density(2, 1, 18);
  const ev::QuantumChannel a = ev::replacer(s, 2);
  const ev::QuantumChannel b = ev::replacer(t, 2);
  const double td = ev::trace_distance(s, t);
  EXPECT_NEAR(ev::channel_trace_distance(a, b), td, 1e-10);
  const ev::DiamondBracket br = ev::diamond_distance(a, b);
  EXPECT_NEAR(br.lower, td, 1e-7);
  EXPECT_NEAR(br.upper, td, 1e-7);
}

TEST(DiamondDistance, BracketSanityOnRandomPairs) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ev::QuantumChannel n = ev::random_channel(2, 2, 200 + seed);
    const ev::QuantumChannel m = ev::random_channel(2, 2, 300 + seed);
    const ev::DiamondBracket b = ev::diamond_distance(n, m);
    EXPECT_GE(b.lower, 0.0);
    EXPECT_LE(b.lower, b.upper + 1e-12);
    EXPECT_LE(b.upper, 1.0 + 1e-9);
    if (b.converged) EXPECT_LE(b.upper - b.lower, 1e-7);
    EXPECT_GE(b.lower, ev::channel_trace_distance(n, m) - 1e-8);
    const double c = choi_distance(n, m);
    EXPECT_GE(b.upper, c - 1e-8);
    EXPECT_LE(b.lower, 2.0 * c + 1e-7);
  }
}

TEST(DiamondDistance, RawNormIsTwiceHalved) {
  const ev::QuantumChannel n = ev::random_channel(2, 2, 19);
  const ev::QuantumChannel m = ev::random_channel(2, 2, 20);
  ev::DiamondOptions raw;
  raw.halved = false;
  const ev::DiamondBracket h = ev::diamond_distance(n, m);
  const ev::DiamondBracket r = ev::diamond_distance(n, m, raw);
  EXPECT_NEAR(r.upper, 2.0 * h.upper, 1e-7);
}

TEST(DiamondDistance, DimensionMismatch) {
  EXPECT_THROW(ev::diamond_distance(ev::identity_channel(2), ev::identity_channel(3)),
               ev::ValidationError);
}
