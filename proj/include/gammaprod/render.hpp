#pragma once

// Text, LaTeX and JSON renderings of identities, reports and survey rows.
//
// JSON field names are a stable contract:
//   identity: n, modulus, coset, nu, b, rhs {pow2, pi_half_units}
//   report:   n, coset_min, residual, tolerance, passed, term_count, relaxed

#include <span>
#include <string>
#include <string_view>

#include "gammaprod/identity.hpp"
#include "gammaprod/survey.hpp"
#include "gammaprod/verifier.hpp"

namespace gammaprod {

enum class Format { Text, Latex, Json };

/// Throws UsageError for anything but "text", "latex" or "json".
Format parse_format(std::string_view tag);
std::string_view format_name(Format format);

struct RenderedIdentity {
  Format format;
  std::string payload;
};

/// Text uses Unicode Gamma and pi unless `ascii` is set. LaTeX is a single
/// display equation without preamble. JSON is one compact object.
RenderedIdentity render_identity(const GammaProductIdentity& id, Format format, bool ascii = false);

/// Parses the JSON rendering back, validating the coset through
/// build_identity and checking nu, b and rhs agree. Throws InputError or
/// InvalidCoset.
GammaProductIdentity parse_identity_json(std::string_view json);

/// "2^2·π^(3/2)" style value, or its ASCII / LaTeX equivalent.
std::string render_value(const SymbolicValue& value, Format format, bool ascii = false);

std::string render_full_product(const FullProductIdentity& full, bool ascii = false);

/// Single line: "PASS n=7 coset=(1,9,11) residual=... tol=..." or JSON.
std::string render_report(const VerificationReport& report, Format format);

/// "(1,33,35,39,47)"
std::string render_coset(std::span<const Residue> coset);

std::string render_survey_header();
std::string render_survey_row(const SurveyRow& row, Format format);

}  // namespace gammaprod
