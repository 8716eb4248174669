#include "mrep/rational.hpp"

#include "mrep/error.hpp"

#include <cctype>

namespace mrep {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotChainForm: return "NotChainForm";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::KindMismatch: return "KindMismatch";
  }
  return "Unknown";
}

namespace {

using Integer = boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
}

// Optional sign followed by digits.
Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(whole);
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) fail(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) fail(text);
    Integer den(std::string{den_text});
    if (den == 0) {
      throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty()) fail(text);
    if (!int_part.empty() && !all_digits(int_part)) fail(text);
    if (!frac_part.empty() && !all_digits(frac_part)) fail(text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part));
    Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part));
    Integer num = whole * scale + frac;
    if (negative) num = -num;
    return Rational(num, scale);
  }

  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_canonical(const Rational& value) {
  auto num = numerator(value);
  auto den = denominator(value);
  return den > 0 && boost::multiprecision::gcd(boost::multiprecision::abs(num), den) == 1;
}

}  // namespace mrep
