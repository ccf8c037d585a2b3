#include "gammaprod/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammaprod/errors.hpp"
#include "gammaprod/identity.hpp"
#include "gammaprod/render.hpp"
#include "gammaprod/survey.hpp"
#include "gammaprod/verifier.hpp"

namespace gammaprod {

namespace {

struct Options {
  bool ascii = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string format = "text";
  std::optional<double> tol;
  std::optional<std::int64_t> coset_of;
  bool json = false;
  std::int64_t max_n = 0;
  bool check_claims = false;
  unsigned threads = 0;
};

int cmd_decompose(const Options& opt, std::ostream& out) {
  const auto d = coset_decomposition(OddModulus(opt.n));
  out << "n=" << d.n.value() << " modulus=" << d.n.doubled() << " nu=" << d.nu
      << " cosets=" << d.cosets.size() << '\n';
  for (const auto& coset : d.cosets) out << render_coset(coset) << '\n';
  return kExitOk;
}

int cmd_identities(const Options& opt, std::ostream& out) {
  const Format format = parse_format(opt.format);
  for (const auto& id : enumerate_identities(OddModulus(opt.n))) {
    out << render_identity(id, format, opt.ascii).payload << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const OddModulus n(opt.n);
  auto identities = enumerate_identities(n);
  if (opt.coset_of) {
    const auto x = *opt.coset_of;
    const auto hit = std::find_if(identities.begin(), identities.end(), [&](const auto& id) {
      return x > 0 && std::binary_search(id.coset.begin(), id.coset.end(), static_cast<Residue>(x));
    });
    if (hit == identities.end()) {
      throw DomainError("--coset-of " + std::to_string(x) + " is not a unit modulo " +
                        std::to_string(n.doubled()));
    }
    identities = {*hit};
  }
  bool all_passed = true;
  for (const auto& id : identities) {
    const auto report = verify_identity(id, opt.tol);
    all_passed = all_passed && report.passed;
    if (opt.json) {
      out << render_report(report, Format::Json) << '\n';
    } else {
      out << render_report(report, Format::Text) << "  "
          << render_identity(id, Format::Text, opt.ascii).payload << '\n';
    }
  }
  return all_passed ? kExitOk : kExitFailed;
}

int cmd_survey(const Options& opt, std::ostream& out) {
  const auto rows = survey_range(opt.max_n, opt.threads);
  if (!opt.json) out << render_survey_header() << '\n';
  for (const auto& row : rows) out << render_survey_row(row, opt.json ? Format::Json : Format::Text) << '\n';
  if (!opt.check_claims) return kExitOk;

  const auto report = check_claims(rows);
  if (opt.json) {
    nlohmann::ordered_json j;
    for (const auto& c : report.claims) {
      j["claims"].push_back(
          {{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["derived"] = {{"many_coset_values", report.many_coset_values},
                    {"full_order_values", report.full_order_values},
                    {"max_coset_count", report.max_coset_count},
                    {"max_coset_values", report.max_coset_values}};
    out << j.dump() << '\n';
  } else {
    for (const auto& c : report.claims) {
      out << "claim (" << c.id << ") " << (c.passed ? "PASS" : "FAIL") << ": " << c.statement
          << " -- found " << c.detail << '\n';
    }
    out << "derived: n with more than 2 cosets = " << render_coset(report.many_coset_values) << '\n'
        << "derived: n with nu = phi = " << render_coset(report.full_order_values) << '\n'
        << "derived: max coset count " << report.max_coset_count << " at n = "
        << render_coset(report.max_coset_values) << '\n';
  }
  return report.all_passed() ? kExitOk : kExitFailed;
}

int cmd_mersenne(const Options& opt, std::ostream& out) {
  const auto id = mersenne_identity(opt.m);
  out << render_identity(id, parse_format(opt.format), opt.ascii).payload << '\n';
  return kExitOk;
}

int cmd_full_product(const Options& opt, std::ostream& out) {
  const OddModulus n(opt.n);
  const auto full = full_product_identity(n);
  const auto report = verify_full_product(n, opt.tol);
  out << render_full_product(full, opt.ascii) << '\n'
      << "phi=" << full.phi << " cosets=" << full.coset_count << " sum_b=" << full.sum_b
      << " sum_nu=" << full.sum_nu << (full.consistent() ? " consistent" : " INCONSISTENT") << '\n'
      << render_report(report, Format::Text) << '\n';
  return report.passed && full.consistent() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gamma products over cosets of <n+2> in the units mod 2n", "gammaprod"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--ascii", opt.ascii, "Write Gamma and pi instead of Unicode glyphs");

  auto* decompose = app.add_subcommand("decompose", "Cosets of <n+2> in the units mod 2n");
  decompose->add_option("n", opt.n, "Odd modulus n > 1")->required();

  auto* identities = app.add_subcommand("identities", "One gamma product identity per coset");
  identities->add_option("n", opt.n, "Odd modulus n > 1")->required();
  identities->add_option("--format", opt.format, "text, latex or json");

  auto* verify = app.add_subcommand("verify", "Numerically verify the identities for n");
  verify->add_option("n", opt.n, "Odd modulus n > 1")->required();
  verify->add_option("--tol", opt.tol, "Absolute tolerance on the log-domain residual");
  verify->add_option("--coset-of", opt.coset_of, "Only the coset containing this unit mod 2n");
  verify->add_flag("--json", opt.json, "One JSON report per line");

  auto* survey = app.add_subcommand("survey", "Tabulate nu, phi and coset counts for odd n");
  survey->add_option("--max", opt.max_n, "Largest n to include")->required();
  survey->add_flag("--json", opt.json, "Newline-delimited JSON rows");
  survey->add_flag("--check-claims", opt.check_claims, "Check the statistics for odd n < 100");
  survey->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");

  auto* mersenne = app.add_subcommand("mersenne", "Subgroup identity for n = 2^m - 1");
  mersenne->add_option("m", opt.m, "Exponent m >= 2")->required();
  mersenne->add_option("--format", opt.format, "text, latex or json");

  auto* full = app.add_subcommand("full-product", "Product over all units mod 2n");
  full->add_option("n", opt.n, "Odd modulus n > 1")->required();
  full->add_option("--tol", opt.tol, "Absolute tolerance on the log-domain residual");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*decompose) return cmd_decompose(opt, out);
    if (*identities) return cmd_identities(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*survey) return cmd_survey(opt, out);
    if (*mersenne) return cmd_mersenne(opt, out);
    if (*full) return cmd_full_product(opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gammaprod
