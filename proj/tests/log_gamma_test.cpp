#include "gammaprod/log_gamma.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gammaprod/errors.hpp"
#include "oracles.hpp"

namespace gammaprod {
namespace {

const double kLogPi = std::log(std::numbers::pi);

TEST(LogGamma, Half) { EXPECT_NEAR(log_gamma(0.5), 0.5 * kLogPi, 1e-14); }

TEST(LogGamma, ReflectionAtOneSixth) {
  EXPECT_NEAR(log_gamma(1.0 / 6.0) + log_gamma(5.0 / 6.0), std::log(2.0 * std::numbers::pi), 1e-13);
}

TEST(LogGamma, MotivatingProduct) {
  const double sum = log_gamma(1.0 / 14.0) + log_gamma(9.0 / 14.0) + log_gamma(11.0 / 14.0);
  EXPECT_NEAR(sum, std::log(4.0) + 1.5 * kLogPi, 1e-13);
}

TEST(LogGamma, HighPrecisionReference) {
  for (const auto& p : oracle::kLogGammaReference) EXPECT_NEAR(log_gamma(p.t), p.value, 1e-13) << p.t;
}

TEST(LogGamma, AgreesWithLibm) {
  for (int k = 1; k < 2000; ++k) {
    const double t = k / 2000.0;
    EXPECT_NEAR(log_gamma(t), std::lgamma(t), 1e-12) << t;
  }
}

TEST(LogGamma, DomainErrors) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(1.0), DomainError);
  EXPECT_THROW(log_gamma(-0.5), DomainError);
  EXPECT_THROW(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(LogGamma, ReflectionOracleOnRandomPoints) {
  std::mt19937_64 rng(20091);
  std::uniform_real_distribution<double> dist(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 200; ++i) {
    const double t = dist(rng);
    const double expected = std::log(std::numbers::pi / std::sin(std::numbers::pi * t));
    EXPECT_NEAR(log_gamma(t) + log_gamma(1.0 - t), expected, 1e-12) << t;
  }
}

TEST(Duplication, Points) {
  EXPECT_LT(std::fabs(verify_duplication(0.25)), 1e-13);
  EXPECT_LT(std::fabs(verify_duplication(0.3)), 1e-13);
  EXPECT_THROW(verify_duplication(0.5), DomainError);
  EXPECT_THROW(verify_duplication(0.0), DomainError);
}

TEST(Duplication, Grid) {
  double worst = 0.0;
  for (int k = 1; k <= 499; ++k) worst = std::max(worst, std::fabs(verify_duplication(k / 1000.0)));
  EXPECT_LT(worst, 1e-12);
}

TEST(CompensatedSum, RecoversLostLowOrderBits) {
  CompensatedSum sum;
  sum += 1.0;
  for (int i = 0; i < 1000; ++i) sum += 1e-17;
  sum += -1.0;
  // A naive running sum returns 0 here.
  EXPECT_NEAR(sum.value(), 1e-14, 1e-20);
}

}  // namespace
}  // namespace gammaprod
