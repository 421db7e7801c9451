#include "lrc/bounds.hpp"
#include "lrc/error.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace lrc;

TEST(Bounds, Griesmer) {
  EXPECT_EQ(griesmer(5, 9, 2), 20u);
  EXPECT_EQ(griesmer(3, 4, 2), 7u);
  for (int d = 1; d < 50; ++d) EXPECT_EQ(griesmer(1, d, 3), static_cast<std::uint64_t>(d));
  // Oracle: floating ceilings.
  for (int q : {2, 3, 4, 5}) {
    for (int k = 1; k <= 7; ++k) {
      for (int d = 1; d <= 200; d += 7) {
        std::uint64_t s = 0;
        for (int i = 0; i < k; ++i) s += static_cast<std::uint64_t>(std::ceil(d / std::pow(q, i)));
        EXPECT_EQ(griesmer(k, d, q), s) << q << " " << k << " " << d;
      }
    }
  }
}

TEST(Bounds, SingletonLocality) {
  EXPECT_EQ(singleton_locality_bound(10, 4, 2), 6);
  EXPECT_EQ(singleton_locality_bound(8, 4, 1), 2);
  for (int k = 1; k < 8; ++k) EXPECT_EQ(singleton_locality_bound(20, k, k), 20 - k + 1);
  try {
    singleton_locality_bound(10, 4, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadR);
  }
  EXPECT_THROW(singleton_locality_bound(10, 4, 0), Error);
}

TEST(Bounds, CadambeMazumdar) {
  auto oracle = griesmer_kopt_oracle(2);
  EXPECT_EQ(oracle(7, 4), 3);
  EXPECT_EQ(oracle(14, 8), 3);  // g_2(4,8) = 15
  EXPECT_EQ(oracle(3, 4), 0);
  // With r >= k the t=0 term is the oracle itself.
  EXPECT_LE(cm_bound(7, 4, 3, oracle), oracle(7, 4));
  EXPECT_GE(cm_bound(14, 8, 1, oracle), 3);
  EXPECT_GE(cm_bound(7, 4, 2, oracle), 3);
  // Brute-force minimisation over a generous t range.
  for (int n = 4; n < 40; n += 3)
    for (int d = 1; d <= n; d += 2)
      for (int r = 1; r <= 3; ++r) {
        long long best = 1LL << 40;
        for (int t = 0; t < 60; ++t) {
          const long long rest = n - t * (r + 1);
          best = std::min(best, r * t + (rest >= d ? oracle(rest, d) : 0LL));
        }
        EXPECT_EQ(cm_bound(n, d, r, oracle), best) << n << " " << d << " " << r;
      }
}

TEST(Bounds, KoptOracleMonotone) {
  auto oracle = griesmer_kopt_oracle(3);
  for (int n = 1; n < 40; ++n)
    for (int d = 1; d < n; ++d) {
      EXPECT_LE(oracle(n, d + 1), oracle(n, d));
      EXPECT_LE(oracle(n, d), oracle(n + 1, d));
    }
}

TEST(Bounds, PointMultiplicity) {
  auto b = point_multiplicity_bounds(7, 4, 3, 2);
  EXPECT_EQ(b.upper, 1);
  auto b2 = point_multiplicity_bounds(14, 8, 3, 2);
  EXPECT_EQ(b2.lower, 2);
  EXPECT_EQ(point_multiplicity_bounds(20, 9, 5, 2).upper, 3);
  EXPECT_EQ(point_multiplicity_bounds(5, 5, 3, 2).lower, 5);
  EXPECT_EQ(point_multiplicity_bounds(5, 1, 3, 2).lower, 0);
  EXPECT_THROW(point_multiplicity_bounds(5, 1, 2, 2), Error);
}

TEST(Bounds, AttainmentThreshold) {
  EXPECT_EQ(griesmer_attainment_threshold(3, 2), 1);
  EXPECT_EQ(griesmer_attainment_threshold(5, 2), 17);
  EXPECT_EQ(griesmer_attainment_threshold(4, 3), 28);
  try {
    griesmer_attainment_threshold(2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadK);
  }
}

TEST(Bounds, LengthFloor) {
  EXPECT_EQ(locality_length_floor(4, 1), 8);
  EXPECT_EQ(locality_length_floor(5, 2), 8);
  EXPECT_EQ(locality_length_floor(4, 4), 5);
  EXPECT_EQ(locality_length_floor(1, 2), 2);
  EXPECT_EQ(locality_length_floor(6, 3), 7);
}
