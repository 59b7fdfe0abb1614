#include "ohtsuki/rational.hpp"

#include <stdexcept>

namespace ohtsuki {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(s.front() == '+');
    const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
    if (s.size() == digits_from) throw std::invalid_argument("empty integer in rational");
    for (std::size_t i = digits_from; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    return boost::multiprecision::cpp_int(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash))) / Rational(den);
}

}  // namespace ohtsuki
