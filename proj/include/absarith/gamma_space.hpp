#pragma once

// The Gamma-space H(D): at simplicial degree n and Gamma-degree k its points
// are n free vectors psi_1..psi_n in R^k with total l1-norm at most lambda,
// plus a torus coordinate in (R/L)^k. Faces merge adjacent coordinates; the
// last face pushes psi_n into the torus.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absarith/arakelov.hpp"
#include "absarith/types.hpp"

namespace absarith {

template <class Scalar>
struct BasicGSConfig {
  Scalar c;       // generator of L = c Z
  Scalar lambda;  // e^u, u the archimedean coefficient
};

using GSConfig = BasicGSConfig<Rational>;
using GSConfigF = BasicGSConfig<double>;

/// Exact configuration (L, lambda) of a divisor; DomainError unless the archimedean part is exact.
GSConfig gs_config(const ArakelovDivisor& d);
GSConfigF gs_config_float(const ArakelovDivisor& d);

template <class Scalar>
struct BasicGSElement {
  std::vector<std::vector<Scalar>> free_part;  // n vectors of length k
  std::vector<Scalar> torus_part;              // length k, entries in [0, c)

  std::size_t n() const { return free_part.size(); }
  std::size_t k() const { return torus_part.size(); }
  friend bool operator==(const BasicGSElement&, const BasicGSElement&) = default;
};

using GSElement = BasicGSElement<Rational>;
using GSElementF = BasicGSElement<double>;

namespace detail {

inline Rational floor_div(const Rational& x, const Rational& c) { return Rational(floor(x / c)); }
inline double floor_div(double x, double c) { return std::floor(x / c); }
inline Rational abs_value(const Rational& x) { return abs(x); }
inline double abs_value(double x) { return std::abs(x); }
inline bool at_most(const Rational& a, const Rational& b) { return a <= b; }
inline bool at_most(double a, double b) { return a <= b + 1e-12; }

}  // namespace detail

/// Representative of x modulo c Z in [0, c).
template <class Scalar>
Scalar reduce_mod(const Scalar& x, const Scalar& c) {
  Scalar r = x - detail::floor_div(x, c) * c;
  if (r < Scalar(0) || !(r < c)) r = Scalar(0);  // floating-point edge
  return r;
}

template <class Scalar>
BasicGSElement<Scalar> zero_gs_element(std::size_t n, std::size_t k) {
  return BasicGSElement<Scalar>{std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(k, Scalar(0))),
                                std::vector<Scalar>(k, Scalar(0))};
}

/// Sum of the l1-norms of the free vectors.
template <class Scalar>
Scalar free_norm(const BasicGSElement<Scalar>& e) {
  Scalar total(0);
  for (const auto& v : e.free_part) {
    for (const auto& x : v) total += detail::abs_value(x);
  }
  return total;
}

template <class Scalar>
bool member(const BasicGSElement<Scalar>& e, const BasicGSConfig<Scalar>& cfg) {
  for (const auto& v : e.free_part) {
    if (v.size() != e.k()) return false;
  }
  for (const auto& x : e.torus_part) {
    if (x < Scalar(0) || !(x < cfg.c)) return false;
  }
  return detail::at_most(free_norm(e), cfg.lambda);
}

template <class Scalar>
bool is_base_point(const BasicGSElement<Scalar>& e) {
  for (const auto& v : e.free_part) {
    for (const auto& x : v) {
      if (x != Scalar(0)) return false;
    }
  }
  for (const auto& x : e.torus_part) {
    if (x != Scalar(0)) return false;
  }
  return true;
}

/// d_j, j in 0..n: psi_i for i < j, psi_j + psi_{j+1} at j, psi_{i+1} after;
/// the torus coordinate absorbs psi_n under d_n and is reduced mod L.
template <class Scalar>
BasicGSElement<Scalar> face(std::size_t j, const BasicGSElement<Scalar>& e, const BasicGSConfig<Scalar>& cfg) {
  const std::size_t n = e.n(), k = e.k();
  if (n == 0 || j > n) {
    throw DomainError("face index " + std::to_string(j) + " out of range for degree " + std::to_string(n));
  }
  BasicGSElement<Scalar> out;
  out.free_part.reserve(n - 1);
  // Output free positions i = 1..n-1 (1-based); free_part[i-1] holds psi_i.
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    if (i < j) {
      out.free_part.push_back(e.free_part[i - 1]);
    } else if (i == j) {
      std::vector<Scalar> merged(k);
      for (std::size_t t = 0; t < k; ++t) merged[t] = e.free_part[i - 1][t] + e.free_part[i][t];
      out.free_part.push_back(std::move(merged));
    } else {
      out.free_part.push_back(e.free_part[i]);
    }
  }
  out.torus_part = e.torus_part;
  if (j == n) {
    for (std::size_t t = 0; t < k; ++t) out.torus_part[t] = reduce_mod(e.free_part[n - 1][t] + e.torus_part[t], cfg.c);
  }
  return out;
}

/// s_j, j in 0..n: a zero vector inserted at free position j+1.
template <class Scalar>
BasicGSElement<Scalar> degeneracy(std::size_t j, const BasicGSElement<Scalar>& e) {
  if (j > e.n()) {
    throw DomainError("degeneracy index " + std::to_string(j) + " out of range for degree " + std::to_string(e.n()));
  }
  BasicGSElement<Scalar> out = e;
  out.free_part.insert(out.free_part.begin() + static_cast<std::ptrdiff_t>(j), std::vector<Scalar>(e.k(), Scalar(0)));
  return out;
}

/// Spherical 1-simplices at Gamma-degree k: {phi in L^k : |phi|_1 <= lambda}, sorted.
std::vector<std::vector<Rational>> pi1_spherical_enumerate(const GSConfig& cfg, std::size_t k,
                                                           std::size_t cap = 1'000'000);

/// gamma(n, k) = 1 + sum_m 2^m C(k, m) C(n, m).
Integer delannoy(std::int64_t n, std::int64_t k);
/// gamma(n, k) = gamma(n-1, k) + gamma(n, k-1) + gamma(n-1, k-1), tabulated.
Integer delannoy_recurrence(std::int64_t n, std::int64_t k);
/// Table gamma(i, j) for 0 <= i <= n, 0 <= j <= k via the recurrence.
std::vector<std::vector<Integer>> delannoy_table(std::int64_t n, std::int64_t k);

/// #pi_1(H(D)(k+)) = gamma(floor(e^{deg D}), k). In exact mode the count is
/// checked against the explicit enumeration whenever it is at most `check_cap`.
Integer pi1_count(const ArakelovDivisor& d, std::size_t k, std::size_t check_cap = 200'000);

struct Pi0Cardinality {
  bool trivial = false;
  Integer cardinality;  // 1 when trivial
};

/// pi_0 at Gamma-degree 1: trivial when e^{deg D} >= 1/2, otherwise the
/// largest integer strictly below e^{-deg D}.
Pi0Cardinality pi0_cardinality_k1(const ArakelovDivisor& d);

/// pi_0(H(D)(k+)) is a point iff k <= 2 e^{deg D}.
bool pi0_trivial_predicate(const ArakelovDivisor& d, std::size_t k);

struct PackingResult {
  std::size_t value = 0;
  bool exact = false;                // false: greedy lower bound only
  std::vector<std::size_t> witness;  // indices of a pairwise unrelated subset
};

/// Maximal size of a pairwise unrelated subset for a reflexive relation given
/// as an adjacency matrix. Exact branch and bound up to `exact_limit` points.
PackingResult packing_number(const std::vector<std::vector<char>>& related, std::size_t exact_limit = 40);

/// Packing number of points on R/Z for the relation d(x, y) <= radius.
PackingResult packing_number_circle(std::span<const Rational> points, const Rational& radius,
                                    std::size_t exact_limit = 40);
PackingResult packing_number_circle(std::span<const double> points, double radius, std::size_t exact_limit = 40);

/// Distance in R/Z.
Rational circle_distance(const Rational& a, const Rational& b);
double circle_distance(double a, double b);

struct HigherPiRecord {
  std::size_t n = 0;
  std::size_t k = 0;
  bool trivial = false;
  std::vector<std::size_t> faces_used;  // faces whose equations forced coordinates to vanish
  std::size_t samples_checked = 0;
  std::size_t samples_non_spherical = 0;
};

/// Shows pi_n(H(D)(k+)) trivial for n >= 2: propagates the face equations
/// d_j psi = 0 to force every coordinate to vanish, then confirms that
/// `samples` random nonzero members fail the spherical condition.
HigherPiRecord higher_pi_trivial(std::size_t n, const GSConfig& cfg, std::size_t k, std::size_t samples = 1000,
                                 std::uint64_t seed = 1);

}  // namespace absarith
