#include "gammaprod/verifier.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include "gammaprod/errors.hpp"
#include "gammaprod/log_gamma.hpp"

namespace gammaprod {

namespace {

constexpr Residue kRelaxAbove = 10'000;

double log_gamma_sum(std::span<const Residue> numerators, Residue denominator) {
  CompensatedSum sum;
  const auto denom = static_cast<double>(denominator);
  for (Residue x : numerators) sum += log_gamma(static_cast<double>(x) / denom);
  return sum.value();
}

double resolve_tolerance(std::optional<double> requested, const OddModulus& n, std::uint64_t terms) {
  if (!requested) return default_tolerance(n, terms);
  if (!(*requested > 0.0)) throw DomainError("tolerance must be > 0, got " + std::to_string(*requested));
  return *requested;
}

VerificationReport make_report(const OddModulus& n, std::optional<Residue> smallest, double lhs,
                               double rhs, double tolerance, std::uint64_t terms) {
  const double residual = lhs - rhs;
  const bool passed = std::fabs(residual) <= tolerance;
  return VerificationReport{n, smallest, residual, tolerance, passed, terms, n.value() > kRelaxAbove};
}

}  // namespace

double default_tolerance(const OddModulus& n, std::uint64_t terms) {
  double tol = 1e-9 * (1.0 + static_cast<double>(terms));
  if (n.value() > kRelaxAbove) tol *= 1.0 + std::log(static_cast<double>(n.doubled()));
  return tol;
}

VerificationReport verify_identity(const GammaProductIdentity& id, std::optional<double> tolerance) {
  const double tol = resolve_tolerance(tolerance, id.n, id.nu);
  const double lhs = log_gamma_sum(id.coset, id.n.doubled());
  CompensatedSum rhs;
  rhs += static_cast<double>(id.rhs.pow2) * std::numbers::ln2;
  rhs += 0.5 * static_cast<double>(id.rhs.pi_half_units) * std::log(std::numbers::pi);
  const std::optional<Residue> smallest =
      id.coset.empty() ? std::nullopt : std::optional<Residue>(id.coset.front());
  return make_report(id.n, smallest, lhs, rhs.value(), tol, id.coset.size());
}

VerificationReport verify_full_product(const OddModulus& n, std::optional<double> tolerance) {
  const UnitGroup units = units_mod(static_cast<std::int64_t>(n.doubled()));
  const double tol = resolve_tolerance(tolerance, n, units.totient());
  const double lhs = log_gamma_sum(units.elements(), n.doubled());
  const double rhs =
      0.5 * static_cast<double>(units.totient()) * std::log(2.0 * std::numbers::pi);
  return make_report(n, std::nullopt, lhs, rhs, tol, units.totient());
}

}  // namespace gammaprod
