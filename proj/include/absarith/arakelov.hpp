#pragma once

// Arakelov divisors on compactified Spec Z, the rank-one lattice of global
// sections of the finite part, theta invariants and their counting
// interpretation as Gaussian averages of lattice-point counts.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "absarith/types.hpp"

namespace absarith {

/// Archimedean coefficient u = log r with r an exact positive rational.
struct ExactExp {
  Rational r;
  friend bool operator==(const ExactExp&, const ExactExp&) = default;
};

/// Archimedean coefficient u given as a double.
struct FloatScale {
  double u = 0.0;
  friend bool operator==(const FloatScale&, const FloatScale&) = default;
};

using ScaleValue = std::variant<ExactExp, FloatScale>;

/// A positive real, exact when both the divisor and the operation allow it.
struct PositiveReal {
  std::optional<Rational> exact;
  double value = 0.0;
};

class ArakelovDivisor {
 public:
  using FinitePart = std::map<std::int64_t, std::int64_t>;  // prime -> a_p

  /// The zero divisor (exact).
  ArakelovDivisor();
  /// Throws DomainError for non-prime keys or a non-positive exact scale.
  ArakelovDivisor(FinitePart finite, ScaleValue arch);

  /// u {infinity} with u given as a double.
  static ArakelovDivisor at_infinity(double u);
  /// log(r) {infinity}, exact.
  static ArakelovDivisor at_infinity_exact(const Rational& r);

  const FinitePart& finite_part() const { return finite_; }
  const ScaleValue& arch_part() const { return arch_; }
  bool is_exact() const { return std::holds_alternative<ExactExp>(arch_); }

  friend bool operator==(const ArakelovDivisor&, const ArakelovDivisor&) = default;

 private:
  FinitePart finite_;
  ScaleValue arch_;
};

ArakelovDivisor operator+(const ArakelovDivisor& a, const ArakelovDivisor& b);
ArakelovDivisor operator-(const ArakelovDivisor& a);

/// The principal divisor (q) = sum v_p(q) {p} + log(1/|q|) {infinity}. DomainError for q = 0.
ArakelovDivisor principal(const Rational& q);

/// L = c Z, c > 0.
struct Lattice1 {
  Rational generator;
  friend bool operator==(const Lattice1&, const Lattice1&) = default;
};

/// {q : v_p(q) >= -a_p for all p} = (prod p^{-a_p}) Z.
Lattice1 lattice_of(const ArakelovDivisor& d);

/// lambda = e^u, the archimedean radius.
PositiveReal arch_radius(const ArakelovDivisor& d);

/// e^{deg D} = r * prod p^{a_p}; exact when the archimedean part is.
PositiveReal exp_degree(const ArakelovDivisor& d);

/// deg D = sum a_p log p + u.
double degree(const ArakelovDivisor& d);

using RealValue = std::variant<Rational, double>;

/// [xi/L] = #{l in L : |l| <= |xi|} = 1 + 2 floor(|xi| / c).
Integer count_xi_over_L(const Rational& xi_norm, const Lattice1& lattice);
Integer count_xi_over_L(double xi_norm, const Lattice1& lattice);

/// phi in L^k and sum |phi_i| <= xi_norm (inclusive).
bool e_xi_member(std::span<const Rational> phi, const Lattice1& lattice, const Rational& xi_norm);

/// All phi in L^k with sum |phi_i| <= xi_norm, lexicographically sorted.
/// DomainError for a non-exact norm; CapExceeded past `cap` vectors.
std::vector<std::vector<Rational>> enumerate_e_xi(const Lattice1& lattice, std::size_t k, const RealValue& xi_norm,
                                                  std::size_t cap = 1'000'000);

/// Result of a theta-series evaluation.
struct ThetaValue {
  double h0 = 0.0;           // log sum_{v in L} exp(-pi |v|^2)
  std::int64_t terms = 0;    // M, the last index summed
  double tail_bound = 0.0;   // rigorous bound on the dropped part of h0
};

/// h0_theta at the degree whose exponential has inverse square t: log(1 + 2 sum_{m>=1} e^{-pi t m^2}).
ThetaValue theta_series(double t, double eps);

/// h0_theta(D) with absolute error below eps.
double theta_h0(const ArakelovDivisor& d, double eps);
/// h0_theta of a divisor of degree `deg`.
double theta_h0_at_degree(double deg, double eps);

/// sum_{n<N} (1 + 2n)(P_n - P_{n+1}) for survival probabilities P_0..P_N:
/// the integral of the step function 1 + 2 floor(rho) against the radial law.
template <class T>
T piecewise_step_average(std::span<const T> survival) {
  T total(0);
  for (std::size_t n = 0; n + 1 < survival.size(); ++n) {
    total += T(static_cast<long long>(2 * n + 1)) * (survival[n] - survival[n + 1]);
  }
  return total;
}

/// The Gaussian average of [z/L] under the density a exp(-pi a |z|^2),
/// integrated exactly piece by piece between consecutive jump radii.
double gaussian_avg_quadrature(const ArakelovDivisor& d, double eps);

struct MonteCarloEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of the same average. The sample range is split into a
/// fixed number of independently seeded substreams, so the result depends
/// only on (samples, seed), never on `threads` (0 = hardware concurrency).
MonteCarloEstimate gaussian_avg_mc(const ArakelovDivisor& d, std::uint64_t samples, std::uint64_t seed,
                                   unsigned threads = 0);

/// h0(d) - h0(-d) - d.
double riemann_roch_defect(double d, double eps);

}  // namespace absarith
