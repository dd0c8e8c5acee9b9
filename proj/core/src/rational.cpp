#include "alcove/rational.hpp"

#include <stdexcept>

#include "alcove/errors.hpp"

namespace alcove {

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::kInvalidType: return "invalid_type";
    case ValidationCode::kParse: return "parse_error";
    case ValidationCode::kDimensionMismatch: return "dimension_mismatch";
    case ValidationCode::kNotAVertex: return "not_a_vertex";
    case ValidationCode::kNotConcave: return "not_concave";
    case ValidationCode::kNotDominating: return "not_dominating";
    case ValidationCode::kLevelMismatch: return "level_mismatch";
    case ValidationCode::kOutsideChamber: return "outside_chamber";
    case ValidationCode::kEmptyInput: return "empty_input";
    case ValidationCode::kIndexOutOfRange: return "index_out_of_range";
    case ValidationCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

const char* to_string(ResourceCode code) {
  switch (code) {
    case ResourceCode::kCandidateBudget: return "candidate_budget_exceeded";
    case ResourceCode::kFoldSteps: return "fold_step_limit_exceeded";
    case ResourceCode::kSearchBudget: return "search_budget_exceeded";
  }
  return "unknown";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ValidationError(ValidationCode::kParse, "not a fraction: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw ValidationError(ValidationCode::kParse, "zero denominator: '" + std::string(text) + "'");
  }
  if (!text.empty() && text.front() == '-') n = -n;
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

// Tolerates non-canonical values such as Rational(4, 2).
bool is_integer(const Rational& value) {
  return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0;
}

long to_long(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + value.get_str());
  return value.get_si();
}

}  // namespace alcove
