#include "gammaprod/survey.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "gammaprod/errors.hpp"
#include "gammaprod/identity.hpp"

namespace gammaprod {

bool is_prime_power(Residue n) {
  if (n < 2) return false;
  for (Residue p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;
}

SurveyRow survey_row(const OddModulus& n) {
  const auto decomposition = coset_decomposition(n);
  SurveyRow row{n.value(), 0, decomposition.nu, decomposition.cosets.size(), 0, 0, 0,
                is_prime_power(n.value())};
  for (const auto& id : enumerate_identities(decomposition)) {
    row.phi += id.nu;
    row.sum_b += id.b;
    row.max_b = std::max(row.max_b, id.b);
    if (is_self_complementary(id)) ++row.self_complementary_count;
  }
  return row;
}

std::vector<SurveyRow> survey_range(std::int64_t max_n, unsigned threads) {
  if (max_n < 3) throw DomainError("survey needs max_n >= 3, got " + std::to_string(max_n));
  const auto count = static_cast<std::size_t>((max_n - 1) / 2);  // odd n in [3, max_n]
  std::vector<SurveyRow> rows(count);
  auto n_at = [](std::size_t i) { return static_cast<std::int64_t>(2 * i + 3); };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) rows[i] = survey_row(OddModulus(n_at(i)));
    return rows;
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) rows[i] = survey_row(OddModulus(n_at(i)));
      });
    }
  }
  return rows;
}

bool ClaimReport::all_passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<Residue>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

}  // namespace

ClaimReport check_claims(std::span<const SurveyRow> rows) {
  std::map<Residue, const SurveyRow*> by_n;
  for (const auto& row : rows) {
    if (row.n >= 100) continue;
    if (!by_n.emplace(row.n, &row).second) {
      throw InputError("duplicate survey row for n=" + std::to_string(row.n));
    }
  }
  for (Residue n = 3; n <= 99; n += 2) {
    if (!by_n.contains(n)) throw InputError("survey rows do not cover n=" + std::to_string(n));
  }
  if (by_n.size() != 49) throw InputError("survey rows below 100 include even or out-of-range n");

  ClaimReport report;
  for (const auto& [n, row] : by_n) {
    if (row->coset_count > 2) report.many_coset_values.push_back(n);
    if (row->nu == row->phi) report.full_order_values.push_back(n);
    report.max_coset_count = std::max(report.max_coset_count, row->coset_count);
  }
  for (const auto& [n, row] : by_n) {
    if (row->coset_count == report.max_coset_count) report.max_coset_values.push_back(n);
  }

  const auto& many = report.many_coset_values;
  report.claims.push_back(Claim{"a", "exactly 9 odd n < 100 have more than 2 cosets",
                                many.size() == 9,
                                std::to_string(many.size()) + " values: " + join(many)});

  std::vector<Residue> odd_counts;
  for (Residue n : many) {
    if (by_n.at(n)->coset_count % 2 == 1) odd_counts.push_back(n);
  }
  const bool only_43 = odd_counts == std::vector<Residue>{43} && by_n.at(43)->coset_count == 3 &&
                       by_n.at(43)->self_complementary_count == 3;
  report.claims.push_back(Claim{
      "b", "among those, only n=43 has an odd count, namely 3, and all 3 are self-complementary",
      only_43,
      "odd counts at n=" + join(odd_counts) + "; n=43 has " +
          std::to_string(by_n.at(43)->coset_count) + " cosets, " +
          std::to_string(by_n.at(43)->self_complementary_count) + " self-complementary"});

  bool others_even = true;
  std::uint64_t max_other = 0;
  for (Residue n : many) {
    if (n == 43) continue;
    others_even = others_even && by_n.at(n)->coset_count % 2 == 0;
    max_other = std::max(max_other, by_n.at(n)->coset_count);
  }
  report.claims.push_back(Claim{"c", "all other counts are even, with maximum 8",
                                others_even && max_other == 8,
                                std::string(others_even ? "all even" : "some odd") +
                                    ", maximum " + std::to_string(max_other) + " at n=" +
                                    join(report.max_coset_values)});

  const auto& full = report.full_order_values;
  report.claims.push_back(Claim{"d", "exactly 16 odd n < 100 have nu(n) = phi(n)", full.size() == 16,
                                std::to_string(full.size()) + " values: " + join(full)});

  std::vector<Residue> not_prime_power;
  for (Residue n : full) {
    if (!by_n.at(n)->is_prime_power) not_prime_power.push_back(n);
  }
  report.claims.push_back(Claim{"e", "every n with nu(n) = phi(n) is a prime or a prime power",
                                not_prime_power.empty(),
                                not_prime_power.empty() ? "all prime powers"
                                                        : "not prime powers: " + join(not_prime_power)});
  return report;
}

}  // namespace gammaprod
