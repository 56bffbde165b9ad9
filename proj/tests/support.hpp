#pragma once

// Random generators shared by the property tests. Every test seeds its own
// engine so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "absarith/gamma_core.hpp"
#include "absarith/group_ring.hpp"
#include "absarith/witt.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Arbitrary pointed self-map of n+ with n drawn from [min_n, max_n].
inline absarith::PointedEndo endo(Rng& rng, std::size_t min_n, std::size_t max_n) {
  const auto n = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(min_n), static_cast<std::int64_t>(max_n)));
  std::vector<std::size_t> img(n + 1, 0);
  for (std::size_t x = 1; x <= n; ++x) img[x] = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n)));
  return absarith::PointedEndo(std::move(img));
}

inline absarith::PointedMap pointed_map(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> img(n + 1, 0);
  for (std::size_t x = 1; x <= n; ++x) img[x] = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(m)));
  return absarith::PointedMap(std::move(img), m);
}

/// Witt element with support in [1, max_k] and coefficients in [-c, c].
inline absarith::WittElement witt(Rng& rng, std::int64_t max_k, std::int64_t c = 3, int terms = 4) {
  absarith::WittElement::Coeffs coeffs;
  const int t = static_cast<int>(uniform(rng, 0, terms));
  for (int i = 0; i < t; ++i) coeffs[uniform(rng, 1, max_k)] += uniform(rng, -c, c);
  return absarith::WittElement(std::move(coeffs));
}

/// Arbitrary element of Z[Q/Z] with denominators up to max_den.
inline absarith::GroupRingElt group_ring(Rng& rng, std::int64_t max_den, std::int64_t c = 3, int terms = 4) {
  absarith::GroupRingElt::Terms t;
  const int count = static_cast<int>(uniform(rng, 0, terms));
  for (int i = 0; i < count; ++i) {
    const std::int64_t den = uniform(rng, 1, max_den);
    t[absarith::Fraction(uniform(rng, 0, den - 1), den)] += uniform(rng, -c, c);
  }
  return absarith::GroupRingElt(std::move(t));
}

}  // namespace testgen
