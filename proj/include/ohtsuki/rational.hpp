#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ohtsuki {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p" and "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace ohtsuki
