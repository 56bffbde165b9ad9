#pragma once

// Exact arithmetic in Z[Q/Z] with the operators sigma_n and rho~_n, and the
// identification of the Aut(Q/Z)-invariant part with W0(S).

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "absarith/types.hpp"
#include "absarith/witt.hpp"

namespace absarith {

/// An element a/b of Q/Z in reduced form, 0 <= a < b.
class Fraction {
 public:
  Fraction() = default;
  /// Reduces num/den modulo 1. Throws DomainError for den <= 0.
  Fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// n * gamma in Q/Z.
  Fraction scaled(std::int64_t n) const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);

  friend auto operator<=>(const Fraction& a, const Fraction& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const Fraction& f);
/// Parses "a/b" (or "0").
Fraction parse_fraction(const std::string& text);

class GroupRingElt {
 public:
  using Terms = std::map<Fraction, Integer>;

  GroupRingElt() = default;
  explicit GroupRingElt(Terms terms);
  GroupRingElt(std::initializer_list<std::pair<const Fraction, Integer>> init);

  /// e(gamma).
  static GroupRingElt basis(Fraction gamma) { return GroupRingElt{{gamma, Integer(1)}}; }

  const Terms& terms() const { return terms_; }
  Integer coeff(const Fraction& gamma) const;
  bool is_zero() const { return terms_.empty(); }
  /// lcm of the denominators in the support (1 for zero).
  std::int64_t conductor() const;

  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

  GroupRingElt& operator+=(const GroupRingElt& rhs);
  GroupRingElt& operator-=(const GroupRingElt& rhs);
  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
  /// Convolution: e(a) e(b) = e(a + b).
  friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
  friend GroupRingElt operator*(const Integer& n, const GroupRingElt& x);

  void add_term(const Fraction& gamma, const Integer& c);

 private:
  Terms terms_;
};

std::string to_string(const GroupRingElt& x);

/// sigma_n(e(gamma)) = e(n gamma).
GroupRingElt sigma(std::int64_t n, const GroupRingElt& x);

/// rho~_n(e(gamma)) = sum of e(gamma') over the n solutions of n gamma' = gamma.
GroupRingElt rho_tilde(std::int64_t n, const GroupRingElt& x);

/// x(gamma) -> x(u gamma) for a unit u modulo the conductor.
GroupRingElt galois_action(std::int64_t u, const GroupRingElt& x);

/// Fixed by every u in (Z/NZ)^x, N the conductor. Uses orbit constancy: the
/// unit group acts transitively on the reduced fractions of each denominator.
bool is_invariant(const GroupRingElt& x);

/// Direct check over every unit u of Z/NZ; slower, used as a cross-check.
bool is_invariant_exhaustive(const GroupRingElt& x);

/// tau(C(k)) -> sum_{k gamma = 0} e(gamma).
GroupRingElt witt_to_groupring(const WittElement& w);

/// Inverse of witt_to_groupring on invariant elements; DomainError otherwise.
WittElement groupring_to_witt(const GroupRingElt& x);

/// sum c * exp(2 pi i n gamma).
std::complex<double> fourier(const GroupRingElt& x, std::int64_t n);

/// Exact value of the Fourier transform at n for invariant x.
Integer ghost_invariant(const GroupRingElt& x, std::int64_t n);

}  // namespace absarith
