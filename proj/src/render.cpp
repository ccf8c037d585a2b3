#include "gammaprod/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "gammaprod/errors.hpp"

namespace gammaprod {

using Json = nlohmann::ordered_json;

Format parse_format(std::string_view tag) {
  if (tag == "text") return Format::Text;
  if (tag == "latex") return Format::Latex;
  if (tag == "json") return Format::Json;
  throw UsageError("unknown format '" + std::string(tag) + "' (expected text, latex or json)");
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::Text: return "text";
    case Format::Latex: return "latex";
    case Format::Json: return "json";
  }
  return "text";
}

namespace {

struct Glyphs {
  std::string_view gamma, pi, times, in, phi, prod;
};

constexpr Glyphs kUnicode{"Γ", "π", "·", "∈", "Φ", "∏"};
constexpr Glyphs kAscii{"Gamma", "pi", "*", " in ", "Phi", "prod"};

const Glyphs& glyphs(bool ascii) { return ascii ? kAscii : kUnicode; }

// pi^(units/2) exponent as it appears after the caret, or empty for pi^1.
std::string pi_exponent(std::int64_t units, Format format) {
  if (units == 2) return {};
  if (units % 2 == 0) {
    const auto whole = std::to_string(units / 2);
    return format == Format::Latex ? "^{" + whole + "}" : "^" + whole;
  }
  const auto frac = std::to_string(units) + "/2";
  return format == Format::Latex ? "^{" + frac + "}" : "^(" + frac + ")";
}

Json identity_json(const GammaProductIdentity& id) {
  return Json{{"n", id.n.value()},
              {"modulus", id.n.doubled()},
              {"coset", id.coset},
              {"nu", id.nu},
              {"b", id.b},
              {"rhs", Json{{"pow2", id.rhs.pow2}, {"pi_half_units", id.rhs.pi_half_units}}}};
}

std::string scientific(double value) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(3) << value;
  return out.str();
}

}  // namespace

std::string render_value(const SymbolicValue& value, Format format, bool ascii) {
  std::string two;
  if (value.pow2 == 1) {
    two = "2";
  } else if (value.pow2 != 0) {
    const auto e = std::to_string(value.pow2);
    two = format == Format::Latex ? "2^{" + e + "}" : "2^" + e;
  }
  std::string pi;
  if (value.pi_half_units != 0) {
    pi = std::string(format == Format::Latex ? "\\pi" : glyphs(ascii).pi) +
         pi_exponent(value.pi_half_units, format);
  }
  if (two.empty() && pi.empty()) return "1";
  if (two.empty() || pi.empty()) return two + pi;
  return two + std::string(format == Format::Latex ? "" : glyphs(ascii).times) + pi;
}

std::string render_coset(std::span<const Residue> coset) {
  std::string out = "(";
  for (std::size_t i = 0; i < coset.size(); ++i) out += (i ? "," : "") + std::to_string(coset[i]);
  return out + ")";
}

RenderedIdentity render_identity(const GammaProductIdentity& id, Format format, bool ascii) {
  const auto denom = std::to_string(id.n.doubled());
  std::string payload;
  switch (format) {
    case Format::Text: {
      const auto& g = glyphs(ascii);
      for (std::size_t i = 0; i < id.coset.size(); ++i) {
        if (i) payload += g.times;
        payload += std::string(g.gamma) + "(" + std::to_string(id.coset[i]) + "/" + denom + ")";
      }
      payload += " = " + render_value(id.rhs, format, ascii);
      break;
    }
    case Format::Latex: {
      payload = "\\[ ";
      for (Residue x : id.coset) {
        payload += "\\Gamma\\left(\\frac{" + std::to_string(x) + "}{" + denom + "}\\right)";
      }
      payload += " = " + render_value(id.rhs, format) + " \\]";
      break;
    }
    case Format::Json:
      payload = identity_json(id).dump();
      break;
  }
  return RenderedIdentity{format, std::move(payload)};
}

GammaProductIdentity parse_identity_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed identity JSON: ") + e.what());
  }
  try {
    const OddModulus n(j.at("n").get<std::int64_t>());
    if (j.at("modulus").get<Residue>() != n.doubled()) throw InputError("modulus is not 2n");
    auto id = build_identity(n, j.at("coset").get<std::vector<Residue>>());
    const SymbolicValue rhs{j.at("rhs").at("pow2").get<std::int64_t>(),
                            j.at("rhs").at("pi_half_units").get<std::int64_t>()};
    if (j.at("nu").get<std::uint64_t>() != id.nu || j.at("b").get<std::uint64_t>() != id.b ||
        !(rhs == id.rhs)) {
      throw InputError("nu, b or rhs disagree with the coset");
    }
    return id;
  } catch (const Json::exception& e) {
    throw InputError(std::string("identity JSON has missing or mistyped fields: ") + e.what());
  }
}

std::string render_full_product(const FullProductIdentity& full, bool ascii) {
  const auto& g = glyphs(ascii);
  const auto mod = std::to_string(full.n.doubled());
  std::ostringstream out;
  out << g.prod << "_{x" << g.in << g.phi << "(" << mod << ")} " << g.gamma << "(x/" << mod
      << ") = (2" << g.pi << ")^" << full.phi / 2;
  return out.str();
}

std::string render_report(const VerificationReport& report, Format format) {
  if (format == Format::Json) {
    Json j{{"n", report.n.value()}, {"coset_min", nullptr}};
    if (report.coset_smallest) j["coset_min"] = *report.coset_smallest;
    j["residual"] = report.residual;
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed;
    j["term_count"] = report.term_count;
    j["relaxed"] = report.relaxed;
    return j.dump();
  }
  std::ostringstream out;
  out << (report.passed ? "PASS" : "FAIL") << " n=" << report.n.value() << ' ';
  if (report.coset_smallest) {
    out << "coset-of=" << *report.coset_smallest;
  } else {
    out << "full-product";
  }
  out << " terms=" << report.term_count << " residual=" << scientific(report.residual)
      << " tol=" << scientific(report.tolerance);
  if (report.relaxed) out << " (relaxed for n > 10^4)";
  return out.str();
}

std::string render_survey_header() {
  std::ostringstream out;
  out << std::setw(7) << "n" << std::setw(8) << "phi" << std::setw(7) << "nu" << std::setw(8)
      << "cosets" << std::setw(10) << "self_comp" << std::setw(7) << "max_b" << std::setw(13)
      << "prime_power";
  return out.str();
}

std::string render_survey_row(const SurveyRow& row, Format format) {
  if (format == Format::Json) {
    return Json{{"n", row.n},
                {"phi", row.phi},
                {"nu", row.nu},
                {"coset_count", row.coset_count},
                {"self_complementary_count", row.self_complementary_count},
                {"max_b", row.max_b},
                {"sum_b", row.sum_b},
                {"is_prime_power", row.is_prime_power}}
        .dump();
  }
  std::ostringstream out;
  out << std::setw(7) << row.n << std::setw(8) << row.phi << std::setw(7) << row.nu << std::setw(8)
      << row.coset_count << std::setw(10) << row.self_complementary_count << std::setw(7)
      << row.max_b << std::setw(13) << (row.is_prime_power ? "yes" : "no");
  return out.str();
}

}  // namespace gammaprod
