#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "random_ensembles.hpp"
#include "shbin/distributions.hpp"
#include "shbin/ensemble.hpp"

namespace shbin {
namespace {

TEST(Ensemble, AcceptsValidInput) {
  EXPECT_EQ(make_ensemble({0.5}).size(), 1u);
  const auto e = make_ensemble({0.2, 0.4, 0.6, 0.8});
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0], 0.2);
  EXPECT_EQ(e[3], 0.8);
}

TEST(Ensemble, RejectsOutOfRangeWithIndex) {
  try {
    make_ensemble({0.5, 1.2});
    FAIL() << "expected invalid_probability";
  } catch (const invalid_probability& err) {
    EXPECT_EQ(err.index(), 1u);
  }
  EXPECT_THROW(make_ensemble({}), invalid_input);
  EXPECT_THROW(make_ensemble({-0.1}), invalid_probability);
  EXPECT_THROW(make_ensemble({0.1, std::numeric_limits<double>::quiet_NaN()}), invalid_probability);
  EXPECT_THROW(make_ensemble({std::numeric_limits<double>::infinity()}), invalid_probability);
}

TEST(Moments, FourPointExample) {
  const auto ms = moments(make_ensemble({0.2, 0.4, 0.6, 0.8}));
  EXPECT_NEAR(ms.lambda1, 2.0, 1e-15);
  EXPECT_NEAR(ms.lambda2, 1.2, 1e-15);
  EXPECT_NEAR(ms.lambda3, 0.8, 1e-15);
  EXPECT_NEAR(ms.lambda4, 0.5664, 1e-15);
  EXPECT_NEAR(ms.sigma2, 0.8, 1e-15);
  EXPECT_NEAR(ms.mu3, 0.0, 1e-15);
  // min(p, q) summed: 0.2 + 0.4 + 0.4 + 0.2
  EXPECT_NEAR(ms.v, 1.2, 1e-15);
  EXPECT_NEAR(ms.v_star, 0.4, 1e-15);
}

TEST(Moments, IidClosedForm) {
  for (const double p : {0.1, 0.37, 0.5, 0.93}) {
    const std::size_t m = 17;
    const auto ms = moments(make_ensemble(std::vector<double>(m, p)));
    for (int j = 1; j <= 4; ++j) {
      const double expected = m * std::pow(p, j);
      const double got = j == 1 ? ms.lambda1 : j == 2 ? ms.lambda2 : j == 3 ? ms.lambda3 : ms.lambda4;
      EXPECT_NEAR(got, expected, 1e-13) << "j=" << j << " p=" << p;
    }
    EXPECT_NEAR(ms.sigma2, m * p * (1 - p), 1e-13);
  }
}

TEST(Moments, DegenerateEnsemble) {
  const auto ms = moments(make_ensemble({0.0, 1.0, 1.0}));
  EXPECT_EQ(ms.lambda1, 2.0);
  EXPECT_EQ(ms.lambda2, 2.0);
  EXPECT_EQ(ms.lambda3, 2.0);
  EXPECT_EQ(ms.lambda4, 2.0);
  EXPECT_EQ(ms.sigma2, 0.0);
  EXPECT_EQ(ms.v, 0.0);
  EXPECT_EQ(ms.v_star, 0.0);
}

TEST(Moments, InvariantsOnRandomEnsembles) {
  testing::EnsembleGenerator gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto e = gen.ensemble(1, 300);
    const auto ms = moments(e);
    const double tol = 1e-12 * static_cast<double>(e.size());
    EXPECT_GE(ms.lambda1, ms.lambda2);
    EXPECT_GE(ms.lambda2, ms.lambda3);
    EXPECT_GE(ms.lambda3, ms.lambda4);
    EXPECT_GE(ms.lambda4, 0.0);
    EXPECT_NEAR(ms.sigma2, ms.lambda1 - ms.lambda2, tol);
    EXPECT_GE(ms.sigma2, 0.0);
    EXPECT_LE(ms.sigma2, ms.lambda1 + tol);
    EXPECT_NEAR(ms.mu3, ms.lambda1 - 3 * ms.lambda2 + 2 * ms.lambda3, tol);
    EXPECT_LE(ms.v, e.size() / 2.0);
    EXPECT_LE(ms.v_star, 0.5);
    EXPECT_LE(ms.v_star, ms.v);
  }
}

TEST(Moments, AgreeWithExactLaw) {
  testing::EnsembleGenerator gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto e = gen.ensemble(1, 50);
    const auto ms = moments(e);
    const auto law = exact_pmf(e);
    EXPECT_NEAR(law.mean(), ms.lambda1, 1e-12);
    EXPECT_NEAR(law.variance(), ms.sigma2, 1e-12);
    EXPECT_NEAR(law.central_moment(3), ms.mu3, 1e-10);
  }
}

TEST(Generator, UniformSpread) {
  const auto study = ensemble_from_spec("uniform-spread", 100, 1.0);
  ASSERT_EQ(study.size(), 100u);
  for (std::size_t i = 0; i < 100; ++i) {
    EXPECT_DOUBLE_EQ(study[i], (i + 1) / 101.0);
  }
  const auto small = ensemble_from_spec(GeneratorKind::uniform_spread, 3, 0.4);
  EXPECT_NEAR(small[0], 0.1, 1e-16);
  EXPECT_NEAR(small[1], 0.2, 1e-16);
  EXPECT_NEAR(small[2], 0.3, 1e-16);
  EXPECT_EQ(ensemble_from_spec(GeneratorKind::uniform_spread, 1, 1.0)[0], 0.5);
}

TEST(Generator, StrictlyIncreasingAndBelowMax) {
  for (const std::size_t m : {2u, 7u, 100u, 513u}) {
    for (const double M : {0.01, 0.3, 1.0}) {
      const auto e = ensemble_from_spec(GeneratorKind::uniform_spread, m, M);
      for (std::size_t i = 1; i < m; ++i) EXPECT_LT(e[i - 1], e[i]);
      EXPECT_LE(e[m - 1], M * m / (m + 1.0) * (1 + 1e-15));
      EXPECT_LT(e[m - 1], M);
    }
  }
}

TEST(Generator, Errors) {
  EXPECT_THROW(ensemble_from_spec("uniform", 10, 0.5), invalid_input);
  EXPECT_THROW(ensemble_from_spec(GeneratorKind::uniform_spread, 10, 0.0), invalid_input);
  EXPECT_THROW(ensemble_from_spec(GeneratorKind::uniform_spread, 10, 1.5), invalid_input);
  EXPECT_THROW(ensemble_from_spec(GeneratorKind::uniform_spread, 0, 0.5), invalid_input);
}

TEST(ProbabilityFile, SkipsBlankLinesAndComments) {
  std::istringstream in("# header\n0.25\n\n  0.5  # inline\n1\n");
  const auto probs = read_probabilities(in, "p.txt");
  EXPECT_EQ(probs, (std::vector<double>{0.25, 0.5, 1.0}));
}

TEST(ProbabilityFile, ReportsLineNumbers) {
  std::istringstream bad("0.5\n\nabc\n");
  try {
    read_probabilities(bad, "p.txt");
    FAIL();
  } catch (const parse_error& err) {
    EXPECT_EQ(err.line(), 3u);
    EXPECT_NE(std::string(err.what()).find("p.txt:3"), std::string::npos);
  }
  std::istringstream range("0.5\n1.5\n");
  EXPECT_THROW(read_probabilities(range, "p.txt"), parse_error);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_probabilities(empty, "p.txt"), invalid_input);
}

TEST(ProbabilityList, CommaSeparated) {
  EXPECT_EQ(parse_probability_list("0.2,0.4, 0.6 ,0.8"), (std::vector<double>{0.2, 0.4, 0.6, 0.8}));
  EXPECT_THROW(parse_probability_list("0.2,,0.4"), invalid_input);
  EXPECT_THROW(parse_probability_list("x"), invalid_input);
}

}  // namespace
}  // namespace shbin
