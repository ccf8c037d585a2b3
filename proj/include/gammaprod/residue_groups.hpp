#pragma once

// Exact arithmetic in the unit groups (Z/nZ)^x and (Z/2nZ)^x for odd n,
// the isomorphism between them, the halving permutation, and the coset
// decomposition of the units mod 2n by the subgroup generated by n+2.
//
// Residues are always represented by the unique value in (0, m).
// Supported odd moduli are 3 <= n <= 2^31 - 1, so 2n fits in 32 bits and
// every product of two residues is formed in a 128-bit intermediate.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gammaprod {

using Residue = std::uint64_t;

inline constexpr Residue kMaxOddModulus = (Residue{1} << 31) - 1;

/// An odd integer n with 3 <= n <= kMaxOddModulus.
class OddModulus {
 public:
  /// Throws InvalidModulus unless n is odd and 3 <= n <= kMaxOddModulus.
  explicit OddModulus(std::int64_t n);

  Residue value() const noexcept { return n_; }
  /// The doubled modulus 2n.
  Residue doubled() const noexcept { return 2 * n_; }
  /// The generator n+2 of the subgroup whose cosets index the identities.
  Residue generator() const noexcept { return n_ + 2; }

  friend bool operator==(const OddModulus&, const OddModulus&) = default;
  friend auto operator<=>(const OddModulus&, const OddModulus&) = default;

 private:
  Residue n_;
};

/// The residues in (0, m) coprime to m, ascending.
class UnitGroup {
 public:
  UnitGroup(Residue modulus, std::vector<Residue> elements)
      : modulus_(modulus), elements_(std::move(elements)) {}

  Residue modulus() const noexcept { return modulus_; }
  std::span<const Residue> elements() const& noexcept { return elements_; }
  std::span<const Residue> elements() const&& = delete;
  /// Euler's totient of the modulus.
  std::size_t totient() const noexcept { return elements_.size(); }
  bool contains(Residue x) const;

 private:
  Residue modulus_;
  std::vector<Residue> elements_;
};

Residue mul_mod(Residue a, Residue b, Residue m) noexcept;
Residue pow_mod(Residue base, std::uint64_t exp, Residue m) noexcept;
Residue gcd(Residue a, Residue b) noexcept;

/// All units modulo m, by sieving out multiples of the prime factors of m.
/// Throws InvalidModulus if m < 2.
UnitGroup units_mod(std::int64_t m);

/// Euler's totient. Counts units_mod(m) for m <= 10^6 and factors m above.
std::uint64_t totient(Residue m);
/// Euler's totient by trial-division factorization.
std::uint64_t totient_by_factorization(Residue m);

/// Smallest k >= 1 with g^k = 1 (mod m). g may be any integer.
/// Throws InvalidModulus if m < 2 and NotAUnit if gcd(g, m) != 1.
std::uint64_t multiplicative_order(std::int64_t g, std::int64_t m);

/// nu(n): the order of 2 modulo n, equal to the order of n+2 modulo 2n.
std::uint64_t halving_order(const OddModulus& n);

/// Isomorphism from the units mod n to the units mod 2n: y if y is odd,
/// else y + n. Throws DomainError if y is not a unit mod n.
Residue alpha(Residue y, const OddModulus& n);
/// Inverse of alpha: x if x < n, else x - n. Throws DomainError if x is not
/// a unit mod 2n.
Residue alpha_inverse(Residue x, const OddModulus& n);
/// Halving mod n: y/2 if y is even, else (y + n)/2. Throws DomainError if y
/// is not a unit mod n.
Residue beta(Residue y, const OddModulus& n);

/// One cycle of beta on the units mod n. labels[i] == alpha(vertices[i]) and
/// vertices[i+1] == beta(vertices[i]), cyclically. The smallest vertex is
/// first.
struct HalvingCycle {
  std::vector<Residue> vertices;
  std::vector<Residue> labels;

  friend bool operator==(const HalvingCycle&, const HalvingCycle&) = default;
};

/// The cycles of beta, ordered by smallest vertex.
std::vector<HalvingCycle> halving_cycles(const OddModulus& n);

/// Partition of the units mod 2n into cosets of <n+2>.
struct CosetDecomposition {
  OddModulus n;
  std::uint64_t nu;
  /// Each coset ascending; cosets ordered by smallest element. cosets[0] is
  /// the subgroup itself.
  std::vector<std::vector<Residue>> cosets;

  /// Index of the coset containing x, if x is a unit mod 2n.
  std::optional<std::size_t> index_of(Residue x) const;

  friend bool operator==(const CosetDecomposition&, const CosetDecomposition&) = default;
};

CosetDecomposition coset_decomposition(const OddModulus& n);

}  // namespace gammaprod
