#include <gtest/gtest.h>

#include <cmath>

#include "entroverify/bounds.hpp"
#include "entroverify/error.hpp"
#include "test_support.hpp"

namespace ev = entroverify;

TEST(Bounds, UnitValues) {
  EXPECT_NEAR(ev::afw_bound(1.0, 2), 4.0, 1e-15);
  EXPECT_NEAR(ev::binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(ev::fannes_audenaert(0.5, 2), 1.0, 1e-15);
  EXPECT_NEAR(ev::renyi_down_bound(2.0, 2, 1.0), 2.0, 1e-15);
}

TEST(Bounds, MatchExtendedPrecisionOracles) {
  const auto o = ev::testing::oracle_values();
  EXPECT_NEAR(ev::afw_bound(0.1, 4), o["afw_0_1_d4"].get<double>(), 1e-12);
  EXPECT_NEAR(ev::renyi_down_bound(0.5, 2, 0.25),
              o["renyi_down_bound_0_5_d2_eps_0_25"].get<double>(), 1e-12);
  EXPECT_NEAR(ev::tsallis_down_bound(0.5, 4, 0.25),
              o["tsallis_down_bound_0_5_d4_eps_0_25"].get<double>(), 1e-12);
  EXPECT_NEAR(ev::marwah_up_bound(0.5, 2, 0.25), o["marwah_up_bound_0_5_d2_eps_0_25"].get<double>(),
              1e-12);
}

TEST(Bounds, ZeroAtZeroDistance) {
  for (int d : {2, 3, 8}) {
    EXPECT_EQ(ev::afw_bound(0.0, d), 0.0);
    EXPECT_EQ(ev::fannes_audenaert(0.0, d), 0.0);
    for (double a : {0.5, 0.75, 1.5, 1.9}) {
      EXPECT_NEAR(ev::renyi_down_bound(a, d, 0.0), 0.0, 1e-15);
      EXPECT_NEAR(ev::tsallis_down_bound(a, d, 0.0), 0.0, 1e-15);
      EXPECT_NEAR(ev::marwah_up_bound(a, d, 0.0), 0.0, 1e-15);
    }
  }
}

TEST(Bounds, RenyiAboveOneIsDimensionIndependent) {
  for (double a : {1.1, 1.5, 2.0, 3.0}) {
    for (double eps : {0.01, 0.3, 1.0}) {
      EXPECT_EQ(ev::renyi_down_bound(a, 2, eps), ev::renyi_down_bound(a, 64, eps));
    }
  }
}

TEST(Bounds, MonotoneInEpsilon) {
  for (int d : {2, 4}) {
    for (double a : {0.5, 0.75, 1.5}) {
      for (ev::BoundFamily f : {ev::BoundFamily::afw, ev::BoundFamily::renyi_down,
                                ev::BoundFamily::tsallis_down, ev::BoundFamily::marwah_up}) {
        double prev = -1.0;
        for (int k = 0; k <= 100; ++k) {
          const double v = ev::evaluate({f, a, d, k / 100.0});
          EXPECT_GE(v, prev - 1e-12) << ev::to_string(f) << " a=" << a << " d=" << d;
          prev = v;
        }
      }
    }
  }
}

TEST(Bounds, RangeChecks) {
  EXPECT_THROW(ev::afw_bound(-0.1, 2), ev::ValidationError);
  EXPECT_THROW(ev::afw_bound(1.1, 2), ev::ValidationError);
  EXPECT_THROW(ev::fannes_audenaert(0.2, 1), ev::ValidationError);
  EXPECT_THROW(ev::renyi_down_bound(1.0, 2, 0.1), ev::ValidationError);
  EXPECT_THROW(ev::renyi_down_bound(0.4, 2, 0.1), ev::ValidationError);
  EXPECT_THROW(ev::tsallis_down_bound(2.0, 2, 0.1), ev::ValidationError);
  EXPECT_THROW(ev::parse_bound_family("pinsker"), ev::ValidationError);
}

TEST(Bounds, FamilyNamesRoundTrip) {
  for (ev::BoundFamily f : {ev::BoundFamily::afw, ev::BoundFamily::fannes_audenaert,
                            ev::BoundFamily::renyi_down, ev::BoundFamily::tsallis_down,
                            ev::BoundFamily::marwah_up}) {
    EXPECT_EQ(ev::parse_bound_family(ev::to_string(f)), f);
  }
  EXPECT_DOUBLE_EQ(ev::MarwahParams(1.5).beta, 0.75);
}
