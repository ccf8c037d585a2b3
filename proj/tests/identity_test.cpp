#include "gammaprod/identity.hpp"

#include <gtest/gtest.h>

#include "gammaprod/errors.hpp"
#include "oracles.hpp"

namespace gammaprod {
namespace {

using V = std::vector<Residue>;

TEST(BuildIdentity, SevenMotivatingCase) {
  const auto id = build_identity(OddModulus(7), {1, 9, 11});
  EXPECT_EQ(id.nu, 3U);
  EXPECT_EQ(id.b, 2U);
  EXPECT_EQ(id.rhs, (SymbolicValue{2, 3}));
}

TEST(BuildIdentity, ThirtyOneFirstCoset) {
  const auto id = build_identity(OddModulus(31), {1, 33, 35, 39, 47});
  EXPECT_EQ(id.nu, 5U);
  EXPECT_EQ(id.b, 4U);
  EXPECT_EQ(id.rhs, (SymbolicValue{4, 5}));
}

TEST(BuildIdentity, Three) {
  const auto id = build_identity(OddModulus(3), {5, 1});
  EXPECT_EQ(id.coset, (V{1, 5}));
  EXPECT_EQ(id.nu, 2U);
  EXPECT_EQ(id.b, 1U);
  EXPECT_EQ(id.rhs, (SymbolicValue{1, 2}));
}

TEST(BuildIdentity, RejectsNonCosets) {
  const OddModulus seven(7);
  EXPECT_THROW(build_identity(seven, {}), InvalidCoset);
  EXPECT_THROW(build_identity(seven, {1, 9}), InvalidCoset);            // not closed
  EXPECT_THROW(build_identity(seven, {1, 3, 9}), InvalidCoset);         // not closed
  EXPECT_THROW(build_identity(seven, {1, 7, 9, 11}), InvalidCoset);     // 7 not a unit
  EXPECT_THROW(build_identity(seven, {1, 9, 11, 15}), InvalidCoset);    // out of range
  EXPECT_THROW(build_identity(seven, {1, 9, 9, 11}), InvalidCoset);     // repeat
  EXPECT_THROW(build_identity(seven, {1, 3, 5, 9, 11, 13}), InvalidCoset);  // union of two cosets
}

TEST(EnumerateIdentities, Counts) {
  EXPECT_EQ(enumerate_identities(OddModulus(31)).size(), 6U);
  EXPECT_EQ(enumerate_identities(OddModulus(43)).size(), 3U);
  const auto seven = enumerate_identities(OddModulus(7));
  ASSERT_EQ(seven.size(), 2U);
  EXPECT_EQ(seven[0].b, 2U);
  EXPECT_EQ(seven[1].b, 1U);
}

TEST(EnumerateIdentities, AgreesWithBuildIdentity) {
  for (std::int64_t raw = 3; raw <= 301; raw += 2) {
    const OddModulus n(raw);
    for (const auto& id : enumerate_identities(n)) EXPECT_EQ(build_identity(n, id.coset), id);
  }
}

TEST(ComplementIdentity, Examples) {
  const auto seven = complement_identity(build_identity(OddModulus(7), {1, 9, 11}));
  EXPECT_EQ(seven.coset, (V{3, 5, 13}));
  EXPECT_EQ(seven.b, 1U);

  const auto thirty_one = complement_identity(build_identity(OddModulus(31), {1, 33, 35, 39, 47}));
  EXPECT_EQ(thirty_one.coset, (V{15, 23, 27, 29, 61}));
  EXPECT_EQ(thirty_one.b, 1U);

  for (const auto& id : enumerate_identities(OddModulus(43))) {
    EXPECT_TRUE(is_self_complementary(id));
    EXPECT_EQ(complement_identity(id), id);
  }
  EXPECT_FALSE(is_self_complementary(enumerate_identities(OddModulus(7))[0]));
}

TEST(ComplementIdentity, InvolutionMappingCosetsToCosets) {
  for (std::int64_t raw = 3; raw <= 999; raw += 2) {
    const OddModulus n(raw);
    for (const auto& id : enumerate_identities(n)) {
      const auto star = complement_identity(id);
      ASSERT_NO_THROW(build_identity(n, star.coset)) << raw;
      EXPECT_EQ(star.b, id.nu - id.b);
      EXPECT_EQ(complement_identity(star), id);
      EXPECT_EQ(is_self_complementary(id), star == id);
    }
  }
}

TEST(TelescopingSum, CosetSumsToNTimesNu) {
  for (std::int64_t raw = 3; raw <= 999; raw += 2) {
    for (const auto& id : enumerate_identities(OddModulus(raw))) {
      std::int64_t excess = 0;
      for (Residue x : id.coset) excess += static_cast<std::int64_t>(x) - raw;
      ASSERT_EQ(excess, 0) << raw;
    }
  }
}

TEST(MersenneIdentity, Examples) {
  const auto m3 = mersenne_identity(3);
  EXPECT_EQ(m3.n.value(), 7U);
  EXPECT_EQ(m3.coset, (V{1, 9, 11}));
  EXPECT_EQ(m3.rhs, (SymbolicValue{2, 3}));

  const auto m4 = mersenne_identity(4);
  EXPECT_EQ(m4.n.value(), 15U);
  EXPECT_EQ(m4.coset, (V{1, 17, 19, 23}));
  EXPECT_EQ(m4.coset, oracle::cosets(15).front());
  EXPECT_EQ(m4.rhs, (SymbolicValue{3, 4}));

  const auto m2 = mersenne_identity(2);
  EXPECT_EQ(m2.n.value(), 3U);
  EXPECT_EQ(m2.coset, (V{1, 5}));
  EXPECT_EQ(m2.rhs, (SymbolicValue{1, 2}));

  EXPECT_THROW(mersenne_identity(1), DomainError);
  EXPECT_THROW(mersenne_identity(32), DomainError);
}

TEST(MersenneIdentity, MatchesSubgroupCoset) {
  for (int m = 2; m <= 16; ++m) {
    const auto id = mersenne_identity(m);
    const auto subgroup = enumerate_identities(id.n).front();
    EXPECT_EQ(id, subgroup) << m;
    EXPECT_EQ(id.nu, static_cast<std::uint64_t>(m));
    EXPECT_EQ(id.b, static_cast<std::uint64_t>(m - 1));
  }
}

TEST(FullProductIdentity, Examples) {
  const auto three = full_product_identity(OddModulus(3));
  EXPECT_EQ(three.phi, 2U);
  EXPECT_EQ(three.rhs, (SymbolicValue{1, 2}));  // (2 pi)^1

  const auto seven = full_product_identity(OddModulus(7));
  EXPECT_EQ(seven.rhs, (SymbolicValue{3, 6}));  // (2 pi)^3

  const auto thirty_one = full_product_identity(OddModulus(31));
  EXPECT_EQ(thirty_one.phi, 30U);
  EXPECT_EQ(thirty_one.sum_b, 15U);
  EXPECT_TRUE(thirty_one.consistent());
}

TEST(FullProductIdentity, EachLargeUnitCountedOnce) {
  for (std::int64_t raw = 3; raw <= 999; raw += 2) {
    const auto full = full_product_identity(OddModulus(raw));
    ASSERT_TRUE(full.consistent()) << raw;
    EXPECT_EQ(full.phi, oracle::units(static_cast<oracle::R>(raw)).size());
  }
}

}  // namespace
}  // namespace gammaprod
