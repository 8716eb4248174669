#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace mrep {

/// Exact scalar used everywhere in the core. GMP keeps every result in
/// canonical form (positive denominator, reduced fraction). Expression
/// templates are disabled so `auto` never captures a lazy expression.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "n", "n/d" or a plain decimal such as "-0.25". Throws
/// Error(ParseError) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

bool is_canonical(const Rational& value);

}  // namespace mrep
