#pragma once

namespace gammaprod {

/// ln Gamma(t) for 0 < t < 1, absolute error <= 1e-12 for t >= 1e-6.
/// Throws DomainError outside (0, 1).
double log_gamma(double t);

/// Residual of the duplication formula in log form,
///   lnG(t) + lnG(t + 1/2) - lnG(2t) - (ln(2 sqrt(pi)) - 2t ln 2),
/// for 0 < t < 1/2. Throws DomainError outside that interval.
double verify_duplication(double t);

/// Neumaier's compensated summation.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace gammaprod
