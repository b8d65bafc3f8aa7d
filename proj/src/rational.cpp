#include "rearrange/rational.hpp"

#include "rearrange/errors.hpp"

#include <cctype>

namespace rearrange {

std::string format_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return format_fraction(r);
}

namespace {

Integer parse_integer(std::string_view s, std::size_t offset) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ParseError("expected an integer", offset);
  for (std::size_t k = start; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("unexpected character in number", offset + k);
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(text.substr(0, slash), 0);
  Integer den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

}  // namespace rearrange
