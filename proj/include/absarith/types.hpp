#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace absarith {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// Bad input that is syntactically fine but outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a/b", "a" or "-a/b". Throws DomainError on malformed text or b = 0.
Rational parse_rational(std::string_view text);

/// Canonical "a/b" form ("a" when the denominator is 1).
std::string to_string(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);

double to_double(const Rational& q);
double to_double(const Integer& z);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace absarith
