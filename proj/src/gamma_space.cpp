#include "absarith/gamma_space.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "absarith/number_theory.hpp"

namespace absarith {

GSConfig gs_config(const ArakelovDivisor& d) {
  const PositiveReal lambda = arch_radius(d);
  if (!lambda.exact) throw DomainError("exact Gamma-space configuration needs an exact archimedean part");
  return GSConfig{lattice_of(d).generator, *lambda.exact};
}

GSConfigF gs_config_float(const ArakelovDivisor& d) {
  return GSConfigF{to_double(lattice_of(d).generator), arch_radius(d).value};
}

std::vector<std::vector<Rational>> pi1_spherical_enumerate(const GSConfig& cfg, std::size_t k, std::size_t cap) {
  if (k == 0) throw DomainError("pi1_spherical_enumerate: k must be positive");
  return enumerate_e_xi(Lattice1{cfg.c}, k, RealValue{cfg.lambda}, cap);
}

Integer delannoy(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw DomainError("delannoy: arguments must be nonnegative");
  Integer total = 1;
  Integer power = 1;
  for (std::int64_t m = 1; m <= std::min(n, k); ++m) {
    power *= 2;
    total += power * binomial(k, m) * binomial(n, m);
  }
  return total;
}

std::vector<std::vector<Integer>> delannoy_table(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw DomainError("delannoy: arguments must be nonnegative");
  std::vector<std::vector<Integer>> g(n + 1, std::vector<Integer>(k + 1, 1));
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= k; ++j) g[i][j] = g[i - 1][j] + g[i][j - 1] + g[i - 1][j - 1];
  }
  return g;
}

Integer delannoy_recurrence(std::int64_t n, std::int64_t k) { return delannoy_table(n, k)[n][k]; }

Integer pi1_count(const ArakelovDivisor& d, std::size_t k, std::size_t check_cap) {
  if (k == 0) throw DomainError("pi1_count: k must be positive");
  const PositiveReal e = exp_degree(d);
  const Integer n = e.exact ? floor(*e.exact) : Integer(static_cast<long long>(std::floor(e.value)));
  if (n > 100'000) throw CapExceeded("pi1_count: e^{deg D} too large");
  const Integer count = delannoy(n.convert_to<std::int64_t>(), static_cast<std::int64_t>(k));
  if (e.exact && count <= check_cap) {
    const auto enumerated = pi1_spherical_enumerate(gs_config(d), k, check_cap);
    if (Integer(enumerated.size()) != count) {
      throw std::logic_error("pi1_count: closed form disagrees with enumeration");
    }
  }
  return count;
}

Pi0Cardinality pi0_cardinality_k1(const ArakelovDivisor& d) {
  const PositiveReal e = exp_degree(d);
  if (e.exact) {
    const Rational& x = *e.exact;
    if (x >= Rational(1, 2)) return Pi0Cardinality{true, 1};
    const Rational inv = Rational(1) / x;
    Integer n = floor(inv);
    if (Rational(n) == inv) n -= 1;  // strict inequality
    return Pi0Cardinality{false, n};
  }
  if (e.value >= 0.5) return Pi0Cardinality{true, 1};
  const double inv = 1.0 / e.value;
  double n = std::floor(inv);
  if (n == inv) n -= 1.0;
  return Pi0Cardinality{false, Integer(static_cast<long long>(n))};
}

bool pi0_trivial_predicate(const ArakelovDivisor& d, std::size_t k) {
  if (k == 0) throw DomainError("pi0_trivial_predicate: k must be positive");
  const PositiveReal e = exp_degree(d);
  if (e.exact) return Rational(static_cast<long long>(k)) <= 2 * *e.exact;
  return static_cast<double>(k) <= 2.0 * e.value;
}

// ---------------------------------------------------------------------------
// Packing numbers

namespace {

using Mask = std::uint64_t;

struct MisSearch {
  std::vector<Mask> conflicts;  // conflicts[v]: related vertices other than v
  std::size_t best = 0;
  Mask best_set = 0;

  // Greedy partition of `candidates` into cliques of the relation graph; an
  // unrelated subset takes at most one vertex from each clique.
  std::size_t clique_cover_bound(Mask candidates) const {
    std::size_t cliques = 0;
    while (candidates) {
      Mask clique_pool = candidates;
      while (clique_pool) {
        const int v = std::countr_zero(clique_pool);
        candidates &= ~(Mask(1) << v);
        clique_pool &= conflicts[v];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(Mask chosen, std::size_t size, Mask candidates) {
    if (candidates == 0) {
      if (size > best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    if (size + clique_cover_bound(candidates) <= best) return;
    // Branch on the candidate with the most conflicts among the candidates.
    int pivot = -1, most = -1;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int deg = std::popcount(conflicts[v] & candidates);
      if (deg > most) {
        most = deg;
        pivot = v;
      }
    }
    const Mask bit = Mask(1) << pivot;
    search(chosen | bit, size + 1, candidates & ~bit & ~conflicts[pivot]);
    if (most > 0) search(chosen, size, candidates & ~bit);
  }
};

}  // namespace

PackingResult packing_number(const std::vector<std::vector<char>>& related, std::size_t exact_limit) {
  const std::size_t n = related.size();
  for (const auto& row : related) {
    if (row.size() != n) throw DomainError("packing_number: relation matrix must be square");
  }
  PackingResult result;
  if (n == 0) {
    result.exact = true;
    return result;
  }
  if (n <= std::min<std::size_t>(exact_limit, 64)) {
    MisSearch s;
    s.conflicts.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && (related[i][j] || related[j][i])) s.conflicts[i] |= Mask(1) << j;
      }
    }
    const Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    s.search(0, 0, all);
    result.value = s.best;
    result.exact = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.best_set >> i & 1) result.witness.push_back(i);
    }
    return result;
  }
  // Greedy in index order: a lower bound only.
  for (std::size_t i = 0; i < n; ++i) {
    bool free = true;
    for (std::size_t w : result.witness) {
      if (related[i][w] || related[w][i]) {
        free = false;
        break;
      }
    }
    if (free) result.witness.push_back(i);
  }
  result.value = result.witness.size();
  result.exact = false;
  return result;
}

Rational circle_distance(const Rational& a, const Rational& b) {
  const Rational diff = a - b;
  const Rational frac = diff - Rational(floor(diff));
  return std::min(frac, Rational(1 - frac));
}

double circle_distance(double a, double b) {
  const double diff = a - b;
  const double frac = diff - std::floor(diff);
  return std::min(frac, 1.0 - frac);
}

namespace {

template <class Scalar>
PackingResult packing_circle_impl(std::span<const Scalar> points, const Scalar& radius, std::size_t exact_limit) {
  const std::size_t n = points.size();
  if (n > std::min<std::size_t>(exact_limit, 64)) {
    // Same greedy as packing_number, without building the full matrix.
    PackingResult result;
    for (std::size_t i = 0; i < n; ++i) {
      const bool free = std::none_of(result.witness.begin(), result.witness.end(), [&](std::size_t w) {
        return circle_distance(points[i], points[w]) <= radius;
      });
      if (free) result.witness.push_back(i);
    }
    result.value = result.witness.size();
    return result;
  }
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) related[i][j] = circle_distance(points[i], points[j]) <= radius;
  }
  return packing_number(related, exact_limit);
}

}  // namespace

PackingResult packing_number_circle(std::span<const Rational> points, const Rational& radius,
                                    std::size_t exact_limit) {
  return packing_circle_impl(points, radius, exact_limit);
}

PackingResult packing_number_circle(std::span<const double> points, double radius, std::size_t exact_limit) {
  return packing_circle_impl(points, radius, exact_limit);
}

// ---------------------------------------------------------------------------
// Higher homotopy

HigherPiRecord higher_pi_trivial(std::size_t n, const GSConfig& cfg, std::size_t k, std::size_t samples,
                                 std::uint64_t seed) {
  if (n < 2) throw DomainError("higher_pi_trivial: n must be at least 2");
  if (k == 0) throw DomainError("higher_pi_trivial: k must be positive");
  HigherPiRecord record;
  record.n = n;
  record.k = k;

  // Variables 1..n are the free coordinates, n+1 the torus coordinate. Each
  // face output coordinate is the sum of one or two input variables; outputs
  // 1..n-1 are free (an equation "= 0" in R^k), output n is torus-valued
  // (only "= 0 mod L", which pins the torus variable itself but not a free one).
  struct Row {
    std::vector<std::size_t> vars;
    bool torus;
  };
  auto face_rows = [n](std::size_t j) {
    std::vector<Row> rows;
    for (std::size_t i = 1; i <= n; ++i) {
      Row row;
      row.torus = i == n;
      if (i < j) {
        row.vars = {i};
      } else if (i == j) {
        row.vars = {j, j + 1};
      } else {
        row.vars = {i + 1};
      }
      rows.push_back(row);
    }
    return rows;
  };

  std::vector<char> zero(n + 2, 0);
  zero[0] = 1;
  std::vector<std::size_t> order{0, 2, 1};
  for (std::size_t j = 3; j <= n; ++j) order.push_back(j);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j : order) {
      bool used = false;
      for (const Row& row : face_rows(j)) {
        std::vector<std::size_t> unknown;
        for (std::size_t v : row.vars) {
          if (!zero[v]) unknown.push_back(v);
        }
        if (unknown.size() != 1) continue;
        const std::size_t v = unknown.front();
        if (row.torus && v != n + 1) continue;
        zero[v] = 1;
        used = true;
        progress = true;
      }
      if (used && std::find(record.faces_used.begin(), record.faces_used.end(), j) == record.faces_used.end()) {
        record.faces_used.push_back(j);
      }
    }
  }
  record.trivial = std::all_of(zero.begin() + 1, zero.end(), [](char z) { return z != 0; });

  // Random nonzero members must all have a non-base face.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(-4, 4), torus_numer(0, 7);
  const Rational free_scale = cfg.lambda / Rational(static_cast<long long>(4 * n * k));
  for (std::size_t s = 0; s < samples; ++s) {
    GSElement e = zero_gs_element<Rational>(n, k);
    do {
      for (auto& v : e.free_part) {
        for (auto& x : v) x = free_scale * numer(rng);
      }
      for (auto& x : e.torus_part) x = cfg.c * Rational(torus_numer(rng), 8);
    } while (is_base_point(e));
    if (!member(e, cfg)) throw std::logic_error("higher_pi_trivial: sampler produced a non-member");
    ++record.samples_checked;
    for (std::size_t j = 0; j <= n; ++j) {
      if (!is_base_point(face(j, e, cfg))) {
        ++record.samples_non_spherical;
        break;
      }
    }
  }
  record.trivial = record.trivial && record.samples_non_spherical == record.samples_checked;
  return record;
}

}  // namespace absarith
