#include <gtest/gtest.h>

#include "random_ensembles.hpp"
#include "shbin/metrics.hpp"

namespace shbin {
namespace {

TEST(TvDistance, Examples) {
  const IntegerDistribution a(3, {0.2, 0.5, 0.3});
  EXPECT_EQ(tv_distance(a, a), 0.0);
  EXPECT_EQ(tv_distance(IntegerDistribution::point_mass(0), IntegerDistribution::point_mass(1)), 1.0);
  EXPECT_NEAR(tv_distance(IntegerDistribution(0, {0.7, 0.3}), IntegerDistribution(0, {0.5, 0.5})), 0.2, 1e-16);
}

TEST(LocDistance, Examples) {
  const IntegerDistribution a(-2, {0.1, 0.9});
  EXPECT_EQ(loc_distance(a, a), 0.0);
  EXPECT_NEAR(loc_distance(IntegerDistribution(0, {0.7, 0.3}), IntegerDistribution(0, {0.5, 0.5})), 0.2, 1e-16);
  EXPECT_EQ(loc_distance(IntegerDistribution::point_mass(4), IntegerDistribution::point_mass(-4)), 1.0);
}

TEST(Distances, AlignOffsets) {
  const IntegerDistribution a(10, {0.5, 0.5});
  const IntegerDistribution b(11, {0.5, 0.5});
  EXPECT_NEAR(tv_distance(a, b), 0.5, 1e-16);
  EXPECT_NEAR(loc_distance(a, b), 0.5, 1e-16);
}

TEST(Distances, MetricAxiomsOnRandomPmfs) {
  testing::EnsembleGenerator gen(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = gen.pmf();
    const auto b = gen.pmf();
    const auto c = gen.pmf();
    const double ab = tv_distance(a, b);
    EXPECT_EQ(ab, tv_distance(b, a));
    EXPECT_EQ(loc_distance(a, b), loc_distance(b, a));
    EXPECT_LE(ab, tv_distance(a, c) + tv_distance(c, b) + 1e-12);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0 + 1e-15);
    EXPECT_GE(loc_distance(a, b), 0.0);
    EXPECT_LE(loc_distance(a, b), 2.0 * ab + 1e-15);
  }
}

TEST(Distances, ZeroIffEqual) {
  testing::EnsembleGenerator gen(62);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen.pmf();
    const IntegerDistribution copy(a.offset(), std::vector<double>(a.masses().begin(), a.masses().end()));
    EXPECT_EQ(tv_distance(a, copy), 0.0);
    const auto b = gen.pmf();
    if (!(a == b)) {
      EXPECT_GT(tv_distance(a, b), 0.0);
    }
  }
}

}  // namespace
}  // namespace shbin
