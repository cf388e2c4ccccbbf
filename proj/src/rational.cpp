#include "ddm/rational.hpp"

#include <cctype>

#include "ddm/errors.hpp"

namespace ddm {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  boost::multiprecision::mpz_int p(n), q{std::string(den)};
  if (q == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal(const Rational& value, int digits) {
  using boost::multiprecision::mpz_int;
  mpz_int scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  mpz_int num = abs(numerator(value)) * scale;
  mpz_int den = denominator(value);
  mpz_int q = num / den;
  mpz_int r = num % den;
  if (2 * r >= den) q += 1;
  std::string s = q.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
  }
  if (value < 0 && q != 0) s.insert(0, "-");
  return s;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::GridNotMonotone: return "GridNotMonotone";
  }
  return "Unknown";
}

}  // namespace ddm
