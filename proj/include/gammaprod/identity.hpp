#pragma once

// Closed-form gamma products over cosets A of <n+2> in the units mod 2n:
//
//   prod_{x in A} Gamma(x / 2n) = 2^b(A) * pi^(nu(n)/2)
//
// where b(A) counts the x in A with x > n. The value is kept as integer
// exponents; numeric evaluation lives in verifier.hpp.

#include <cstdint>
#include <vector>

#include "gammaprod/residue_groups.hpp"

namespace gammaprod {

/// 2^pow2 * pi^(pi_half_units / 2).
struct SymbolicValue {
  std::int64_t pow2 = 0;
  std::int64_t pi_half_units = 0;

  friend bool operator==(const SymbolicValue&, const SymbolicValue&) = default;
};

struct GammaProductIdentity {
  OddModulus n;
  std::vector<Residue> coset;  // ascending
  std::uint64_t nu;
  std::uint64_t b;
  SymbolicValue rhs;

  Residue smallest() const { return coset.front(); }

  friend bool operator==(const GammaProductIdentity&, const GammaProductIdentity&) = default;
};

/// Validates that `coset` is exactly one coset of <n+2> (every element a unit
/// mod 2n, no duplicates, closed under multiplication by n+2, size nu(n)) and
/// builds its identity. Element order in the input does not matter.
/// Throws InvalidCoset otherwise.
GammaProductIdentity build_identity(const OddModulus& n, std::vector<Residue> coset);

/// One identity per coset, in coset order.
std::vector<GammaProductIdentity> enumerate_identities(const OddModulus& n);
std::vector<GammaProductIdentity> enumerate_identities(const CosetDecomposition& decomposition);

/// The identity for {2n - x : x in A}; its b is nu - b(A).
GammaProductIdentity complement_identity(const GammaProductIdentity& id);

bool is_self_complementary(const GammaProductIdentity& id);

/// The subgroup identity for n = 2^m - 1, built from its closed form
/// {1} u {2^k + n : 1 <= k < m}. Throws DomainError unless 2 <= m <= 31.
GammaProductIdentity mersenne_identity(std::int64_t m);

/// Product over every unit mod 2n: (2 pi)^(phi(n)/2).
struct FullProductIdentity {
  OddModulus n;
  std::uint64_t phi;
  std::uint64_t coset_count;
  std::uint64_t sum_b;   // sum of b(A) over all cosets
  std::uint64_t sum_nu;  // sum of nu over all cosets
  SymbolicValue rhs;     // pow2 = sum_b, pi_half_units = sum_nu

  /// sum_b == phi/2 and sum_nu == phi.
  bool consistent() const noexcept { return 2 * sum_b == phi && sum_nu == phi; }
};

FullProductIdentity full_product_identity(const OddModulus& n);

}  // namespace gammaprod
