#pragma once

#include <cstdint>
#include <vector>

#include "absarith/types.hpp"

namespace absarith {

/// Möbius function. Throws DomainError for n <= 0.
int mobius(std::int64_t n);

/// Positive divisors of n in ascending order. Throws DomainError for n <= 0.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Throws DomainError unless a, b > 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t n);

/// Prime factorisation as (p, e) pairs, p ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& z, std::int64_t p);

Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace absarith
