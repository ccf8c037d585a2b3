#include "gammaprod/log_gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gammaprod/errors.hpp"

namespace gammaprod {

namespace {

// Shift t into [kShift, kShift + 1) where the Stirling series converges fast.
constexpr int kShift = 16;

// B_{2k} / (2k (2k - 1)) for k = 1..9.
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

double stirling(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
  series *= inv;
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

}  // namespace

double log_gamma(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("log_gamma requires 0 < t < 1, got " + std::to_string(t));
  }
  // Gamma(t) = Gamma(t + kShift) / (t (t+1) ... (t + kShift - 1)).
  double rising = 1.0;
  for (int k = 1; k < kShift; ++k) rising *= t + k;
  return stirling(t + kShift) - std::log(rising) - std::log(t);
}

double verify_duplication(double t) {
  if (!(t > 0.0 && t < 0.5)) {
    throw DomainError("duplication check requires 0 < t < 1/2, got " + std::to_string(t));
  }
  const double log_c = std::log(2.0 * std::sqrt(std::numbers::pi)) - 2.0 * t * std::numbers::ln2;
  CompensatedSum sum;
  sum += log_gamma(t);
  sum += log_gamma(t + 0.5);
  sum += -log_gamma(2.0 * t);
  sum += -log_c;
  return sum.value();
}

CompensatedSum& CompensatedSum::operator+=(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
  return *this;
}

}  // namespace gammaprod
