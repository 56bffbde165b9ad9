#include "absarith/types.hpp"

#include <cctype>

namespace absarith {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw DomainError("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(s, text));
  }
  const Integer num = parse_integer(trim(s.substr(0, slash)), text);
  const Integer den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0) {
    throw DomainError("zero denominator in rational: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer floor(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);  // always > 0
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }
double to_double(const Integer& z) { return z.convert_to<double>(); }

}  // namespace absarith
