#include "absarith/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace absarith {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) {
    throw DomainError(std::string(what) + ": argument must be positive, got " + std::to_string(n));
  }
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require_positive(n, "factorize");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  require_positive(a, "gcd");
  require_positive(b, "gcd");
  return std::gcd(a, b);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  require_positive(a, "lcm");
  require_positive(b, "lcm");
  return std::lcm(a, b);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int valuation(const Integer& z, std::int64_t p) {
  if (z == 0) throw DomainError("valuation of zero");
  if (!is_prime(p)) throw DomainError("valuation: " + std::to_string(p) + " is not prime");
  Integer x = z < 0 ? Integer(-z) : z;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace absarith
