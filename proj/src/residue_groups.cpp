#include "gammaprod/residue_groups.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "gammaprod/errors.hpp"

namespace gammaprod {

namespace {
__extension__ using Wide = unsigned __int128;
}  // namespace

OddModulus::OddModulus(std::int64_t n) {
  if (n < 3 || n % 2 == 0 || static_cast<Residue>(n) > kMaxOddModulus) {
    throw InvalidModulus("n must be odd and > 1 (and at most 2^31-1), got " + std::to_string(n));
  }
  n_ = static_cast<Residue>(n);
}

bool UnitGroup::contains(Residue x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

Residue mul_mod(Residue a, Residue b, Residue m) noexcept {
  return static_cast<Residue>(static_cast<Wide>(a) * b % m);
}

Residue pow_mod(Residue base, std::uint64_t exp, Residue m) noexcept {
  Residue result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

Residue gcd(Residue a, Residue b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

UnitGroup units_mod(std::int64_t m) {
  if (m < 2) throw InvalidModulus("modulus must be >= 2, got " + std::to_string(m));
  const auto mod = static_cast<Residue>(m);
  // Strike out multiples of each prime factor of m.
  std::vector<bool> coprime(mod, true);
  coprime[0] = false;
  Residue rest = mod;
  for (Residue p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    for (Residue k = p; k < mod; k += p) coprime[k] = false;
  }
  if (rest > 1) {
    for (Residue k = rest; k < mod; k += rest) coprime[k] = false;
  }
  std::vector<Residue> elements;
  for (Residue e = 1; e < mod; ++e) {
    if (coprime[e]) elements.push_back(e);
  }
  return UnitGroup(mod, std::move(elements));
}

std::uint64_t totient_by_factorization(Residue m) {
  if (m < 2) throw InvalidModulus("modulus must be >= 2, got " + std::to_string(m));
  std::uint64_t phi = m;
  for (Residue p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    phi -= phi / p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

std::uint64_t totient(Residue m) {
  if (m <= 1'000'000) return units_mod(static_cast<std::int64_t>(m)).totient();
  return totient_by_factorization(m);
}

std::uint64_t multiplicative_order(std::int64_t g, std::int64_t m) {
  if (m < 2) throw InvalidModulus("modulus must be >= 2, got " + std::to_string(m));
  const auto mod = static_cast<Residue>(m);
  std::int64_t reduced = g % m;
  if (reduced < 0) reduced += m;
  const auto unit = static_cast<Residue>(reduced);
  if (gcd(unit, mod) != 1) {
    throw NotAUnit(std::to_string(g) + " is not a unit modulo " + std::to_string(m));
  }
  std::uint64_t k = 1;
  for (Residue power = unit; power != 1 % mod; power = mul_mod(power, unit, mod)) ++k;
  return k;
}

std::uint64_t halving_order(const OddModulus& n) {
  const auto nu = multiplicative_order(2, static_cast<std::int64_t>(n.value()));
  // Transport along alpha, since alpha(2) = n+2.
  assert(nu == multiplicative_order(static_cast<std::int64_t>(n.generator()),
                                    static_cast<std::int64_t>(n.doubled())));
  return nu;
}

namespace {

void require_unit_mod_n(Residue y, const OddModulus& n) {
  if (y == 0 || y >= n.value() || gcd(y, n.value()) != 1) {
    throw DomainError(std::to_string(y) + " is not a unit modulo " + std::to_string(n.value()));
  }
}

}  // namespace

Residue alpha(Residue y, const OddModulus& n) {
  require_unit_mod_n(y, n);
  return y % 2 == 1 ? y : y + n.value();
}

Residue alpha_inverse(Residue x, const OddModulus& n) {
  if (x == 0 || x >= n.doubled() || gcd(x, n.doubled()) != 1) {
    throw DomainError(std::to_string(x) + " is not a unit modulo " + std::to_string(n.doubled()));
  }
  return x < n.value() ? x : x - n.value();
}

Residue beta(Residue y, const OddModulus& n) {
  require_unit_mod_n(y, n);
  return y % 2 == 0 ? y / 2 : (y + n.value()) / 2;
}

std::vector<HalvingCycle> halving_cycles(const OddModulus& n) {
  const Residue mod = n.value();
  std::vector<bool> seen(mod, false);
  std::vector<HalvingCycle> cycles;
  // Scanning ascending makes each cycle start at its smallest vertex.
  for (Residue start = 1; start < mod; ++start) {
    if (seen[start] || gcd(start, mod) != 1) continue;
    HalvingCycle cycle;
    for (Residue y = start; !seen[y]; y = beta(y, n)) {
      seen[y] = true;
      cycle.vertices.push_back(y);
      cycle.labels.push_back(alpha(y, n));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::optional<std::size_t> CosetDecomposition::index_of(Residue x) const {
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), x)) return i;
  }
  return std::nullopt;
}

CosetDecomposition coset_decomposition(const OddModulus& n) {
  const Residue mod = n.doubled();
  const Residue g = n.generator();
  const UnitGroup units = units_mod(static_cast<std::int64_t>(mod));
  const std::uint64_t nu = halving_order(n);

  std::vector<bool> used(mod, false);
  std::vector<std::vector<Residue>> cosets;
  cosets.reserve(units.totient() / nu);
  for (Residue x : units.elements()) {
    if (used[x]) continue;
    std::vector<Residue> coset;
    coset.reserve(nu);
    for (Residue y = x; !used[y]; y = mul_mod(y, g, mod)) {
      used[y] = true;
      coset.push_back(y);
    }
    assert(coset.size() == nu);
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return CosetDecomposition{n, nu, std::move(cosets)};
}

}  // namespace gammaprod
