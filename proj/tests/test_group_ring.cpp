#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "absarith/group_ring.hpp"
#include "absarith/number_theory.hpp"
#include "absarith/witt.hpp"
#include "support.hpp"

using namespace absarith;

namespace {

GroupRingElt e(std::int64_t a, std::int64_t b) { return GroupRingElt::basis(Fraction(a, b)); }

// Convolution carried out on exact rationals reduced mod 1, independent of Fraction.
std::map<Rational, Integer> oracle_product(const GroupRingElt& x, const GroupRingElt& y) {
  std::map<Rational, Integer> out;
  for (const auto& [g, a] : x.terms()) {
    for (const auto& [h, b] : y.terms()) {
      Rational s = Rational(g.num(), g.den()) + Rational(h.num(), h.den());
      s -= Rational(floor(s));
      out[s] += a * b;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<Rational, Integer> as_rationals(const GroupRingElt& x) {
  std::map<Rational, Integer> out;
  for (const auto& [g, a] : x.terms()) out[Rational(g.num(), g.den())] = a;
  return out;
}

}  // namespace

TEST_CASE("fractions are canonical") {
  CHECK(Fraction(3, 6) == Fraction(1, 2));
  CHECK(Fraction(-1, 3) == Fraction(2, 3));
  CHECK(Fraction(7, 7) == Fraction(0, 1));
  CHECK(Fraction(5, 4) == Fraction(1, 4));
  CHECK(to_string(Fraction(0, 5)) == "0");
  CHECK(to_string(Fraction(4, 6)) == "2/3");
  CHECK(parse_fraction("10/4") == Fraction(1, 2));
  CHECK(parse_fraction("0") == Fraction(0, 1));
  CHECK_THROWS_AS(Fraction(1, 0), DomainError);
}

TEST_CASE("ring operations") {
  CHECK(e(1, 2) * e(1, 2) == e(0, 1));
  CHECK(e(1, 2) * e(1, 3) == e(5, 6));
  const GroupRingElt s = e(0, 1) + e(1, 2);
  CHECK(s * s == Integer(2) * e(0, 1) + Integer(2) * e(1, 2));
  CHECK((e(1, 3) - e(1, 3)).is_zero());
  testgen::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const GroupRingElt x = testgen::group_ring(rng, 12), y = testgen::group_ring(rng, 12),
                       z = testgen::group_ring(rng, 12);
    CHECK(as_rationals(x * y) == oracle_product(x, y));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * e(0, 1) == x);
  }
}

TEST_CASE("sigma and rho_tilde") {
  CHECK(sigma(2, e(1, 2)) == e(0, 1));
  CHECK(sigma(3, e(1, 6) + e(5, 6)) == Integer(2) * e(1, 2));
  CHECK(rho_tilde(2, e(0, 1)) == e(0, 1) + e(1, 2));
  CHECK(rho_tilde(3, e(1, 2)) == e(1, 6) + e(1, 2) + e(5, 6));
  CHECK_THROWS_AS(sigma(0, e(0, 1)), DomainError);
  CHECK_THROWS_AS(rho_tilde(0, e(0, 1)), DomainError);

  testgen::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const GroupRingElt x = testgen::group_ring(rng, 10), y = testgen::group_ring(rng, 10);
    const std::int64_t n = testgen::uniform(rng, 1, 8), m = testgen::uniform(rng, 1, 8);
    CHECK(sigma(n, x * y) == sigma(n, x) * sigma(n, y));
    CHECK(sigma(n, rho_tilde(n, x)) == Integer(n) * x);
    CHECK(rho_tilde(2, rho_tilde(3, x)) == rho_tilde(6, x));
    CHECK(sigma(n * m, x) == sigma(n, sigma(m, x)));
    CHECK(rho_tilde(n * m, x) == rho_tilde(m, rho_tilde(n, x)));
    CHECK(rho_tilde(m, sigma(m, x) * y) == x * rho_tilde(m, y));
    const std::int64_t g = gcd(n, m);
    CHECK(sigma(m, rho_tilde(n, x)) == Integer(g) * rho_tilde(n / g, sigma(m / g, x)));
    if (g == 1) CHECK(sigma(n, rho_tilde(m, x)) == rho_tilde(m, sigma(n, x)));
    // Every preimage really is an n-th root of the original term.
    const GroupRingElt roots = rho_tilde(n, e(1, 7));
    CHECK(roots.terms().size() == static_cast<std::size_t>(n));
    for (const auto& [gamma, c] : roots.terms()) CHECK(gamma.scaled(n) == Fraction(1, 7));
  }
}

TEST_CASE("Galois invariance") {
  CHECK(is_invariant(e(1, 3) + e(2, 3)));
  CHECK_FALSE(is_invariant(e(1, 3)));
  CHECK(is_invariant(GroupRingElt()));
  CHECK(is_invariant(Integer(5) * e(0, 1)));
  CHECK_FALSE(is_invariant(e(1, 4) + Integer(2) * e(3, 4)));
  testgen::Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    const GroupRingElt x = testgen::group_ring(rng, 12, 2, 3);
    CHECK(is_invariant(x) == is_invariant_exhaustive(x));
    const WittElement w = testgen::witt(rng, 12);
    CHECK(is_invariant(witt_to_groupring(w)));
    CHECK(is_invariant_exhaustive(witt_to_groupring(w)));
  }
}

TEST_CASE("Witt ring isomorphism") {
  CHECK(witt_to_groupring(WittElement::cyclic(2)) == e(0, 1) + e(1, 2));
  CHECK(witt_to_groupring(WittElement::cyclic(1)) == e(0, 1));
  CHECK_THROWS_AS(groupring_to_witt(e(1, 3)), DomainError);
  testgen::Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const WittElement a = testgen::witt(rng, 12), b = testgen::witt(rng, 12);
    const std::int64_t n = testgen::uniform(rng, 1, 8);
    CHECK(groupring_to_witt(witt_to_groupring(a)) == a);
    CHECK(witt_to_groupring(a * b) == witt_to_groupring(a) * witt_to_groupring(b));
    CHECK(witt_to_groupring(a + b) == witt_to_groupring(a) + witt_to_groupring(b));
    CHECK(witt_to_groupring(frobenius(n, a)) == sigma(n, witt_to_groupring(a)));
    CHECK(witt_to_groupring(verschiebung(n, a)) == rho_tilde(n, witt_to_groupring(a)));
  }
}

TEST_CASE("Fourier transform and exact ghost") {
  for (std::int64_t n = -5; n <= 5; ++n) {
    const auto f = fourier(e(0, 1), n);
    CHECK(f.real() == doctest::Approx(1.0));
    CHECK(f.imag() == doctest::Approx(0.0));
  }
  for (std::int64_t k = 1; k <= 12; ++k) {
    for (std::int64_t n = 1; n <= 24; ++n) {
      CHECK(ghost_invariant(witt_to_groupring(WittElement::cyclic(k)), n) == (n % k == 0 ? k : 0));
    }
  }
  CHECK_THROWS_AS(ghost_invariant(e(1, 3), 1), DomainError);
  testgen::Rng rng(35);
  for (int i = 0; i < 200; ++i) {
    const GroupRingElt x = witt_to_groupring(testgen::witt(rng, 12));
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto f = fourier(x, n);
      const double exact = to_double(ghost_invariant(x, n));
      CHECK(std::abs(f.real() - exact) < 1e-8);
      CHECK(std::abs(f.imag()) < 1e-8);
    }
  }
}
