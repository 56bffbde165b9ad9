#include "absarith/group_ring.hpp"

#include <numbers>
#include <numeric>
#include <sstream>

#include "absarith/number_theory.hpp"

namespace absarith {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("fraction denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);  // gcd(0, den) = den
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::scaled(std::int64_t n) const {
  // n * num may be large; reduce n first.
  const std::int64_t r = ((n % den_) + den_) % den_;
  return Fraction(static_cast<std::int64_t>((static_cast<__int128>(r) * num_) % den_), den_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  const std::int64_t den = std::lcm(a.den_, b.den_);
  return Fraction(a.num_ * (den / a.den_) + b.num_ * (den / b.den_), den);
}

std::string to_string(const Fraction& f) {
  if (f.num() == 0) return "0";
  return std::to_string(f.num()) + "/" + std::to_string(f.den());
}

Fraction parse_fraction(const std::string& text) {
  const Rational q = parse_rational(text);
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  const Integer reduced = ((num % den) + den) % den;
  return Fraction(reduced.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

GroupRingElt::GroupRingElt(Terms terms) {
  for (const auto& [g, c] : terms) add_term(g, c);
}

GroupRingElt::GroupRingElt(std::initializer_list<std::pair<const Fraction, Integer>> init) {
  for (const auto& [g, c] : init) add_term(g, c);
}

void GroupRingElt::add_term(const Fraction& gamma, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(gamma, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GroupRingElt::coeff(const Fraction& gamma) const {
  const auto it = terms_.find(gamma);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t GroupRingElt::conductor() const {
  std::int64_t n = 1;
  for (const auto& [g, c] : terms_) n = std::lcm(n, g.den());
  return n;
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& rhs) {
  for (const auto& [g, c] : rhs.terms_) add_term(g, c);
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& rhs) {
  for (const auto& [g, c] : rhs.terms_) add_term(g, -c);
  return *this;
}

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
  GroupRingElt out;
  for (const auto& [ga, ca] : a.terms_) {
    for (const auto& [gb, cb] : b.terms_) out.add_term(ga + gb, ca * cb);
  }
  return out;
}

GroupRingElt operator*(const Integer& n, const GroupRingElt& x) {
  GroupRingElt out;
  for (const auto& [g, c] : x.terms_) out.add_term(g, n * c);
  return out;
}

std::string to_string(const GroupRingElt& x) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(g) << ':' << c;
  }
  os << '}';
  return os.str();
}

GroupRingElt sigma(std::int64_t n, const GroupRingElt& x) {
  if (n <= 0) throw DomainError("sigma: index must be positive");
  GroupRingElt out;
  for (const auto& [g, c] : x.terms()) out.add_term(g.scaled(n), c);
  return out;
}

GroupRingElt rho_tilde(std::int64_t n, const GroupRingElt& x) {
  if (n <= 0) throw DomainError("rho_tilde: index must be positive");
  GroupRingElt out;
  for (const auto& [g, c] : x.terms()) {
    // Preimages of a/b are (a + j b) / (n b), j = 0..n-1.
    for (std::int64_t j = 0; j < n; ++j) {
      out.add_term(Fraction(g.num() + j * g.den(), n * g.den()), c);
    }
  }
  return out;
}

GroupRingElt galois_action(std::int64_t u, const GroupRingElt& x) {
  const std::int64_t n = x.conductor();
  if (std::gcd(u, n) != 1) throw DomainError("galois_action: u is not a unit modulo the conductor");
  const std::int64_t r = ((u % n) + n) % n;
  return sigma(r == 0 ? 1 : r, x);
}

bool is_invariant(const GroupRingElt& x) {
  // Coefficients must be constant on {a/d : gcd(a, d) = 1} for each d.
  std::map<std::int64_t, std::pair<Integer, std::int64_t>> per_den;  // d -> (coefficient, #terms)
  for (const auto& [g, c] : x.terms()) {
    auto [it, inserted] = per_den.try_emplace(g.den(), c, 0);
    if (!inserted && it->second.first != c) return false;
    ++it->second.second;
  }
  for (const auto& [d, entry] : per_den) {
    std::int64_t phi = 0;
    for (std::int64_t a = 0; a < d; ++a) {
      if (std::gcd(a, d) == 1) ++phi;
    }
    if (entry.second != phi) return false;
  }
  return true;
}

bool is_invariant_exhaustive(const GroupRingElt& x) {
  const std::int64_t n = x.conductor();
  for (std::int64_t u = 1; u <= n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    for (const auto& [g, c] : x.terms()) {
      if (x.coeff(g.scaled(u)) != c) return false;
    }
  }
  return true;
}

GroupRingElt witt_to_groupring(const WittElement& w) {
  GroupRingElt out;
  for (const auto& [k, c] : w.coeffs()) {
    for (std::int64_t j = 0; j < k; ++j) out.add_term(Fraction(j, k), c);
  }
  return out;
}

WittElement groupring_to_witt(const GroupRingElt& x) {
  if (!is_invariant(x)) throw DomainError("groupring_to_witt: element is not Galois invariant");
  // Under the isomorphism rho(n) is the sum of the elements of exact order n,
  // so its coefficient is read off e(1/n).
  std::map<std::int64_t, Integer> primitive;
  for (const auto& [g, c] : x.terms()) {
    if (g.num() == (g.den() == 1 ? 0 : 1)) primitive.emplace(g.den(), c);
  }
  return from_primitive_basis(primitive);
}

std::complex<double> fourier(const GroupRingElt& x, std::int64_t n) {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [g, c] : x.terms()) {
    const Fraction ng = g.scaled(n);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(ng.num()) / static_cast<double>(ng.den());
    total += c.convert_to<double>() * std::polar(1.0, angle);
  }
  return total;
}

Integer ghost_invariant(const GroupRingElt& x, std::int64_t n) {
  if (!is_invariant(x)) throw DomainError("ghost_invariant: element is not Galois invariant");
  return ghost(groupring_to_witt(x), n);
}

}  // namespace absarith
