#pragma once

// Log-domain numeric checks of gamma product identities. Products are never
// multiplied out; Gamma(1/2n) overflows binary64 for moderate n.

#include <cstdint>
#include <optional>

#include "gammaprod/identity.hpp"

namespace gammaprod {

struct VerificationReport {
  OddModulus n;
  /// Smallest coset element; empty for the product over all units.
  std::optional<Residue> coset_smallest;
  /// sum of ln Gamma(x/2n) minus the log of the claimed value.
  double residual;
  double tolerance;
  bool passed;  // |residual| <= tolerance
  std::uint64_t term_count;
  /// True when n > 10^4 and the tolerance carries the (1 + ln 2n) factor.
  bool relaxed;
};

/// 1e-9 * (1 + terms), scaled by (1 + ln 2n) when n > 10^4.
double default_tolerance(const OddModulus& n, std::uint64_t terms);

/// Reports honestly on whatever identity it is given, including tampered
/// ones; structural validation is build_identity's job.
VerificationReport verify_identity(const GammaProductIdentity& id,
                                   std::optional<double> tolerance = std::nullopt);

/// Checks prod over all units x mod 2n of Gamma(x/2n) = (2 pi)^(phi(n)/2).
VerificationReport verify_full_product(const OddModulus& n,
                                       std::optional<double> tolerance = std::nullopt);

}  // namespace gammaprod
