#pragma once

// Tabulation of the coset structure over ranges of odd n, and the checks of
// the published statistics for odd n < 100.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gammaprod/residue_groups.hpp"

namespace gammaprod {

struct SurveyRow {
  Residue n;
  std::uint64_t phi;
  std::uint64_t nu;
  std::uint64_t coset_count;
  std::uint64_t self_complementary_count;
  std::uint64_t max_b;
  std::uint64_t sum_b;  // equals phi/2 (full product identity)
  bool is_prime_power;

  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

/// True if n = p^k for a prime p and k >= 1. Trial division.
bool is_prime_power(Residue n);

SurveyRow survey_row(const OddModulus& n);

/// One row per odd n in [3, max_n], ascending regardless of scheduling.
/// threads == 0 picks the hardware concurrency. Throws DomainError if
/// max_n < 3.
std::vector<SurveyRow> survey_range(std::int64_t max_n, unsigned threads = 0);

struct Claim {
  std::string id;         // "a" .. "e"
  std::string statement;  // what the published text asserts
  bool passed;
  std::string detail;     // what the sweep found
};

/// Claim outcomes plus the lists the published text gives only as counts.
/// The lists are computed here, never taken as ground truth.
struct ClaimReport {
  std::vector<Claim> claims;
  std::vector<Residue> many_coset_values;  // n with coset_count > 2
  std::vector<Residue> full_order_values;  // n with nu == phi
  std::uint64_t max_coset_count = 0;
  std::vector<Residue> max_coset_values;   // n attaining max_coset_count

  bool all_passed() const;
};

/// Evaluates the statistics claims on the rows with n < 100. Throws
/// InputError unless those rows cover every odd 3 <= n <= 99 exactly once.
ClaimReport check_claims(std::span<const SurveyRow> rows);

}  // namespace gammaprod
