#pragma once

// The ring W0(S) of endomorphisms of finite pointed sets, written in the
// cyclic basis {tau(C(k))}: an element is a finitely supported map k -> m(k).

#include <cstdint>
#include <map>
#include <string>

#include "absarith/gamma_core.hpp"
#include "absarith/types.hpp"

namespace absarith {

class WittElement {
 public:
  using Coeffs = std::map<std::int64_t, Integer>;

  WittElement() = default;
  /// Zero coefficients are dropped; keys must be positive.
  explicit WittElement(Coeffs coeffs);
  WittElement(std::initializer_list<std::pair<const std::int64_t, Integer>> init);

  /// tau(C(k)).
  static WittElement cyclic(std::int64_t k);
  static WittElement one() { return cyclic(1); }

  const Coeffs& coeffs() const { return coeffs_; }
  Integer coeff(std::int64_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// All coefficients nonnegative (the element is the class of an actual endomorphism).
  bool is_effective() const;
  /// Largest k in the support, 0 for the zero element.
  std::int64_t max_order() const;

  friend bool operator==(const WittElement&, const WittElement&) = default;

  WittElement& operator+=(const WittElement& rhs);
  WittElement& operator-=(const WittElement& rhs);
  friend WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
  friend WittElement operator-(WittElement a, const WittElement& b) { return a -= b; }
  friend WittElement operator-(const WittElement& a);
  /// tau(C(a)) * tau(C(b)) = gcd(a, b) * tau(C(lcm(a, b))).
  friend WittElement operator*(const WittElement& a, const WittElement& b);
  friend WittElement operator*(const Integer& n, const WittElement& w);

 private:
  void add_term(std::int64_t k, const Integer& c);
  Coeffs coeffs_;
};

std::string to_string(const WittElement& w);

/// The universal additive invariant: the cycle type of T on its eventual image.
WittElement tau(const PointedEndo& t);

/// gh_n(w) = sum_{k | n} k * m(k).
Integer ghost(const WittElement& w, std::int64_t n);

/// Ghost values indexed by n.
using GhostVector = std::map<std::int64_t, Integer>;

/// Ghost components at every divisor of n.
GhostVector ghost_vector(const WittElement& w, std::int64_t n);

/// Möbius inversion m(k) = (1/k) sum_{d | k} mu(k/d) gh_d. The index set must
/// be divisor-closed; a non-integral m(k) raises DomainError.
WittElement from_ghost(const GhostVector& values);

/// F_n: tau(C(k)) -> gcd(n, k) tau(C(k / gcd(n, k))).
WittElement frobenius(std::int64_t n, const WittElement& w);

/// V_n: tau(C(k)) -> tau(C(n k)).
WittElement verschiebung(std::int64_t n, const WittElement& w);

/// Coefficients in the basis rho(n), where tau(C(n)) = sum_{u | n} rho(u).
std::map<std::int64_t, Integer> to_primitive_basis(const WittElement& w);
WittElement from_primitive_basis(const std::map<std::int64_t, Integer>& c);

}  // namespace absarith
