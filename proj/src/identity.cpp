#include "gammaprod/identity.hpp"

#include <algorithm>
#include <string>

#include "gammaprod/errors.hpp"

namespace gammaprod {

namespace {

GammaProductIdentity make_identity(const OddModulus& n, std::vector<Residue> coset) {
  const auto nu = static_cast<std::uint64_t>(coset.size());
  const auto b = static_cast<std::uint64_t>(
      std::count_if(coset.begin(), coset.end(), [&](Residue x) { return x > n.value(); }));
  SymbolicValue rhs{static_cast<std::int64_t>(b), static_cast<std::int64_t>(nu)};
  return GammaProductIdentity{n, std::move(coset), nu, b, rhs};
}

}  // namespace

GammaProductIdentity build_identity(const OddModulus& n, std::vector<Residue> coset) {
  const Residue mod = n.doubled();
  const std::string where = " (n=" + std::to_string(n.value()) + ")";
  if (coset.empty()) throw InvalidCoset("coset is empty" + where);

  std::sort(coset.begin(), coset.end());
  if (std::adjacent_find(coset.begin(), coset.end()) != coset.end()) {
    throw InvalidCoset("coset has repeated elements" + where);
  }
  for (Residue x : coset) {
    if (x == 0 || x >= mod || gcd(x, mod) != 1) {
      throw InvalidCoset(std::to_string(x) + " is not a unit modulo " + std::to_string(mod) + where);
    }
  }
  for (Residue x : coset) {
    const Residue next = mul_mod(x, n.generator(), mod);
    if (!std::binary_search(coset.begin(), coset.end(), next)) {
      throw InvalidCoset("not closed under multiplication by " + std::to_string(n.generator()) +
                         ": " + std::to_string(x) + " -> " + std::to_string(next) + where);
    }
  }
  // A closed set is a union of cosets; the size pins it to exactly one.
  const std::uint64_t nu = halving_order(n);
  if (coset.size() != nu) {
    throw InvalidCoset("size " + std::to_string(coset.size()) + " is not nu=" +
                       std::to_string(nu) + where);
  }
  return make_identity(n, std::move(coset));
}

std::vector<GammaProductIdentity> enumerate_identities(const CosetDecomposition& decomposition) {
  std::vector<GammaProductIdentity> out;
  out.reserve(decomposition.cosets.size());
  for (const auto& coset : decomposition.cosets) out.push_back(make_identity(decomposition.n, coset));
  return out;
}

std::vector<GammaProductIdentity> enumerate_identities(const OddModulus& n) {
  return enumerate_identities(coset_decomposition(n));
}

GammaProductIdentity complement_identity(const GammaProductIdentity& id) {
  std::vector<Residue> mirrored;
  mirrored.reserve(id.coset.size());
  for (Residue x : id.coset) mirrored.push_back(id.n.doubled() - x);
  std::sort(mirrored.begin(), mirrored.end());
  return make_identity(id.n, std::move(mirrored));
}

bool is_self_complementary(const GammaProductIdentity& id) {
  // Ascending A maps to descending A*, so compare A against its reversed mirror.
  const Residue mod = id.n.doubled();
  return std::equal(id.coset.begin(), id.coset.end(), id.coset.rbegin(),
                    [mod](Residue x, Residue y) { return x == mod - y; });
}

GammaProductIdentity mersenne_identity(std::int64_t m) {
  if (m < 2 || m > 31) throw DomainError("m must satisfy 2 <= m <= 31, got " + std::to_string(m));
  const OddModulus n((std::int64_t{1} << m) - 1);
  std::vector<Residue> coset{1};
  for (std::int64_t k = 1; k < m; ++k) coset.push_back((Residue{1} << k) + n.value());
  return build_identity(n, std::move(coset));
}

FullProductIdentity full_product_identity(const OddModulus& n) {
  const auto decomposition = coset_decomposition(n);
  FullProductIdentity full{n, totient(n.value()), decomposition.cosets.size(), 0, 0, {}};
  for (const auto& id : enumerate_identities(decomposition)) {
    full.sum_b += id.b;
    full.sum_nu += id.nu;
  }
  full.rhs = SymbolicValue{static_cast<std::int64_t>(full.sum_b),
                           static_cast<std::int64_t>(full.sum_nu)};
  return full;
}

}  // namespace gammaprod
