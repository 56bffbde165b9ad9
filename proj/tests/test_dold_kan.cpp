#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "absarith/dold_kan.hpp"
#include "absarith/number_theory.hpp"
#include "absarith/smith.hpp"
#include "dk_oracle.hpp"
#include "support.hpp"

using namespace absarith;
using Element = FiniteAbelianGroup::Element;
using testgen::KerCoker;
using testgen::as_int64;
using testgen::ker_coker_oracle;
using testgen::random_hom;
using testgen::torsion_profile;

namespace {

FiniteAbelianGroup Z(std::int64_t m) { return FiniteAbelianGroup({m}); }

Element random_element(testgen::Rng& rng, const FiniteAbelianGroup& g) {
  return g.element_at(static_cast<std::uint64_t>(testgen::uniform(rng, 0, static_cast<std::int64_t>(g.order()) - 1)));
}

HPhiElement random_h_element(testgen::Rng& rng, const GroupHom& hom, const PairOfPointedSets& pair) {
  HPhiElement psi = zero_element(hom, pair);
  for (std::size_t x = 1; x <= pair.size(); ++x) {
    psi.values[x] = random_element(rng, pair.in_subset(x) ? hom.codomain() : hom.domain());
  }
  return psi;
}

PairOfPointedSets random_pair(testgen::Rng& rng, std::size_t size) {
  std::vector<std::size_t> y{0};
  for (std::size_t x = 1; x <= size; ++x) {
    if (testgen::uniform(rng, 0, 1)) y.push_back(x);
  }
  return PairOfPointedSets(size, y);
}

// A random map of pairs out of src: the target subset is enlarged to contain f(Y).
std::pair<PointedMap, PairOfPointedSets> random_map_of_pairs(testgen::Rng& rng, const PairOfPointedSets& src,
                                                            std::size_t target_size) {
  const PointedMap f = testgen::pointed_map(rng, src.size(), target_size);
  std::vector<std::size_t> y{0};
  for (std::size_t x = 1; x <= src.size(); ++x) {
    if (src.in_subset(x)) y.push_back(f(x));
  }
  for (std::size_t v = 1; v <= target_size; ++v) {
    if (testgen::uniform(rng, 0, 2) == 0) y.push_back(v);
  }
  return {f, PairOfPointedSets(target_size, y)};
}

}  // namespace

TEST_CASE("finite abelian groups") {
  const FiniteAbelianGroup g({2, 6});
  CHECK(g.order() == 12);
  CHECK(g.add({1, 5}, {1, 3}) == Element{0, 2});
  CHECK(g.neg({1, 1}) == Element{1, 5});
  CHECK(g.scale(-1, {1, 1}) == Element{1, 5});
  for (std::uint64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
  CHECK(FiniteAbelianGroup().order() == 1);
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), DomainError);
  CHECK_THROWS_AS(GroupHom(Z(2), Z(4), {{1}}), DomainError);  // 2 * 1 != 0 in Z/4
  CHECK_NOTHROW(GroupHom(Z(2), Z(4), {{2}}));
  CHECK(GroupHom(Z(3), Z(3), {{4}})({2}) == Element{2});
}

TEST_CASE("smith normal form") {
  CHECK(smith_diagonal({{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
  CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(invariant_factors({{4, 0}, {0, 6}}, 2) == std::vector<Integer>{2, 12});
  CHECK(invariant_factors({{1, 0}, {0, 1}}, 2).empty());
  CHECK_THROWS_AS(invariant_factors({{2, 0}}, 2), DomainError);
  testgen::Rng rng(50);
  for (int i = 0; i < 200; ++i) {
    IntMatrix m(3, std::vector<Integer>(3));
    for (auto& row : m) {
      for (auto& v : row) v = testgen::uniform(rng, -6, 6);
    }
    const auto d = smith_diagonal(m);
    for (std::size_t t = 1; t < d.size(); ++t) {
      if (d[t] != 0) CHECK(d[t] % d[t - 1] == 0);
    }
    // The product of the diagonal is |det|.
    const Integer det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(d[0] * d[1] * d[2] == (det < 0 ? Integer(-det) : det));
  }
}

TEST_CASE("pairs and H_phi on maps") {
  CHECK_THROWS_AS(PairOfPointedSets(3, {1}), DomainError);
  const PairOfPointedSets p(2, {0, 2});
  const PairOfPointedSets sp = smash_pair(p, 3);
  CHECK(sp.size() == 6);
  for (std::size_t i = 1; i <= 6; ++i) CHECK(sp.in_subset(i) == (i > 3));

  const GroupHom id2 = GroupHom::identity(Z(2));
  testgen::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const PairOfPointedSets pair = random_pair(rng, 4);
    const HPhiElement psi = random_h_element(rng, id2, pair);
    CHECK(h_phi_map(id2, pair, pair, PointedMap::identity(4), psi) == psi);
  }

  // X \ Y = {1, 2} collapsed onto the point 1 of Y' = {0, 1}.
  const GroupHom phi(Z(4), Z(8), {{2}});
  const PairOfPointedSets src(2, {0});
  const PairOfPointedSets dst(1, {0, 1});
  const HPhiElement psi{{{}, {1}, {2}}};
  CHECK(h_phi_map(phi, src, dst, PointedMap({0, 1, 1}, 1), psi).values[1] == Element{6});
  CHECK(h_phi_map(id2, PairOfPointedSets(2, {0}), PairOfPointedSets(1, {0, 1}), PointedMap({0, 1, 1}, 1),
                  HPhiElement{{{}, {1}, {1}}})
            .values[1] == Element{0});
  CHECK_THROWS_AS(h_phi_map(phi, dst, src, PointedMap({0, 1}, 2), HPhiElement{{{}, {1}}}), DomainError);
}

TEST_CASE("H_phi is a functor") {
  testgen::Rng rng(52);
  for (int i = 0; i < 200; ++i) {
    const GroupHom hom = random_hom(rng, 8);
    const PairOfPointedSets x = random_pair(rng, static_cast<std::size_t>(testgen::uniform(rng, 0, 5)));
    const auto [f, y] = random_map_of_pairs(rng, x, static_cast<std::size_t>(testgen::uniform(rng, 0, 5)));
    const auto [g, z] = random_map_of_pairs(rng, y, static_cast<std::size_t>(testgen::uniform(rng, 0, 5)));
    const HPhiElement psi = random_h_element(rng, hom, x);
    const HPhiElement step = h_phi_map(hom, x, y, f, psi);
    CHECK(is_valid(hom, y, step));
    CHECK(h_phi_map(hom, x, z, compose(g, f), psi) == h_phi_map(hom, y, z, g, step));
    // Additivity in psi.
    const HPhiElement chi = random_h_element(rng, hom, x);
    CHECK(h_phi_map(hom, x, y, f, add(hom, x, psi, chi)) == add(hom, y, step, h_phi_map(hom, x, y, f, chi)));
  }
}

TEST_CASE("levels") {
  const GroupHom h23 = GroupHom::zero(Z(2), Z(3));
  const GroupHom h22 = GroupHom::identity(Z(2));
  CHECK(simplicial_level(0, h23).cardinality == 3);
  CHECK(simplicial_level(1, h23).cardinality == 6);
  CHECK(simplicial_level(2, h22).cardinality == 8);
  CHECK(enumerate_level(2, h22).size() == 8);
  CHECK(simplicial_level(20, h22).enumerable == false);
  CHECK_THROWS_AS(enumerate_level(20, h22), CapExceeded);
  const auto level = enumerate_level(3, GroupHom::zero(Z(2), Z(3)));
  CHECK(level.size() == 24);
  std::set<std::vector<Element>> distinct;
  for (const auto& psi : level) distinct.insert(psi.values);
  CHECK(distinct.size() == 24);
}

TEST_CASE("faces at level one") {
  const GroupHom phi(Z(3), Z(6), {{2}});
  for (const auto& psi : enumerate_level(1, phi)) {
    CHECK(face(phi, 0, psi).values[1] == psi.values[2]);
    CHECK(face(phi, 1, psi).values[1] == phi.codomain().add(phi(psi.values[1]), psi.values[2]));
  }
  const GroupHom zero = GroupHom::zero(Z(2), Z(2));
  for (const auto& psi : enumerate_level(1, zero)) CHECK(face(zero, 0, psi) == face(zero, 1, psi));
  CHECK_THROWS_AS(face(zero, 2, enumerate_level(1, zero).front()), DomainError);
}

TEST_CASE("simplicial identities hold exhaustively on low levels") {
  const FiniteAbelianGroup z2 = Z(2);
  for (const GroupHom& hom : {GroupHom::identity(z2), GroupHom::zero(z2, z2)}) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const HPhiElement& x : enumerate_level(n, hom)) {
        for (std::size_t j = 0; j <= n; ++j) {
          const HPhiElement sj = degeneracy(hom, j, x);
          CHECK(level_of(sj) == n + 1);
          CHECK(face(hom, j, sj) == x);
          CHECK(face(hom, j + 1, sj) == x);
          for (std::size_t i = 0; i <= j; ++i) CHECK(degeneracy(hom, i, degeneracy(hom, j, x)) ==
                                                     degeneracy(hom, j + 1, degeneracy(hom, i, x)));
          for (std::size_t i = 0; i <= n + 1; ++i) {
            if (i < j) CHECK(face(hom, i, sj) == degeneracy(hom, j - 1, face(hom, i, x)));
            if (i > j + 1) CHECK(face(hom, i, sj) == degeneracy(hom, j, face(hom, i - 1, x)));
          }
        }
        if (n == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) {
          for (std::size_t i = 0; i < j; ++i) {
            if (n >= 2) CHECK(face(hom, i, face(hom, j, x)) == face(hom, j - 1, face(hom, i, x)));
          }
        }
      }
    }
  }
}

TEST_CASE("the simplicial action is contravariant") {
  testgen::Rng rng(53);
  auto random_monotone = [&](std::size_t m, std::size_t n) {
    std::vector<std::size_t> v(m + 1);
    for (auto& x : v) x = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<std::int64_t>(n)));
    std::sort(v.begin(), v.end());
    return MonotoneMap(v, n);
  };
  CHECK_THROWS_AS(MonotoneMap({1, 0}, 2), DomainError);
  for (int i = 0; i < 200; ++i) {
    const GroupHom hom = random_hom(rng, 8);
    const std::size_t k = static_cast<std::size_t>(testgen::uniform(rng, 0, 4));
    const std::size_t m = static_cast<std::size_t>(testgen::uniform(rng, 0, 4));
    const std::size_t n = static_cast<std::size_t>(testgen::uniform(rng, 0, 4));
    const MonotoneMap inner = random_monotone(k, m);
    const MonotoneMap outer = random_monotone(m, n);
    const HPhiElement psi = random_h_element(rng, hom, boundary_pair(n));
    CHECK(simplicial_action(hom, compose(outer, inner), psi) ==
          simplicial_action(hom, inner, simplicial_action(hom, outer, psi)));
    // Duality j <= theta(i) iff theta*(j) <= i.
    const PointedMap dual = outer.dual();
    for (std::size_t j = 0; j <= n + 1; ++j) {
      for (std::size_t ii = 0; ii <= m; ++ii) CHECK((j <= outer(ii)) == (dual(j) <= ii));
    }
  }
}

TEST_CASE("Gamma-degree k is the k-th power of the level") {
  // H_phi(X ∧ k+, Y ∧ k+) = H_phi(X, Y)^k with faces acting componentwise.
  testgen::Rng rng(54);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (int rep = 0; rep < 30; ++rep) {
      const GroupHom hom = random_hom(rng, 6);
      const std::size_t n = static_cast<std::size_t>(testgen::uniform(rng, 1, 3));
      const PairOfPointedSets big = smash_pair(boundary_pair(n), k);
      const PairOfPointedSets small = smash_pair(boundary_pair(n - 1), k);
      const HPhiElement psi = random_h_element(rng, hom, big);
      for (std::size_t j = 0; j <= n; ++j) {
        const PointedMap f = MonotoneMap::coface(n, j).dual();
        const HPhiElement lhs = h_phi_map(hom, big, small, smash(f, PointedMap::identity(k)), psi);
        for (std::size_t c = 1; c <= k; ++c) {
          HPhiElement component{{{}}};
          for (std::size_t x = 1; x <= n + 1; ++x) component.values.push_back(psi.values[(x - 1) * k + c]);
          const HPhiElement d = face(hom, j, component);
          for (std::size_t x = 1; x <= n; ++x) CHECK(lhs.values[(x - 1) * k + c] == d.values[x]);
        }
      }
    }
  }
}

TEST_CASE("homotopy groups of small complexes") {
  const FiniteAbelianGroup z2 = Z(2);
  auto id = homotopy_groups(GroupHom::identity(z2), 3);
  REQUIRE(id.size() == 4);
  for (const auto& g : id) CHECK(g.trivial());

  auto zero = homotopy_groups(GroupHom::zero(z2, z2), 2);
  CHECK(zero[0].invariants == std::vector<Integer>{2});
  CHECK(zero[1].invariants == std::vector<Integer>{2});
  CHECK(zero[2].trivial());

  auto incl = homotopy_groups(GroupHom(z2, Z(4), {{2}}), 2);
  CHECK(incl[0].invariants == std::vector<Integer>{2});
  CHECK(incl[1].trivial());
  CHECK(incl[2].trivial());

  auto trivial_source = homotopy_groups(GroupHom::zero(FiniteAbelianGroup(), FiniteAbelianGroup({2, 4})), 1);
  CHECK(trivial_source[0].invariants == std::vector<Integer>{2, 4});
  CHECK(trivial_source[0].order == 8);
  CHECK_THROWS_AS(homotopy_groups(GroupHom::identity(FiniteAbelianGroup({8, 8})), 3, 1000), CapExceeded);
}

TEST_CASE("pi_0 is the cokernel and pi_1 the kernel") {
  testgen::Rng rng(55);
  for (int i = 0; i < 30; ++i) {
    const GroupHom hom = random_hom(rng, 16);
    const auto groups = homotopy_groups(hom, 3);
    const KerCoker oracle = ker_coker_oracle(hom, 16);
    CHECK(groups[0].order == oracle.coker_order);
    CHECK(groups[1].order == oracle.ker_order);
    CHECK(torsion_profile(as_int64(groups[0].invariants), 16) == oracle.coker);
    CHECK(torsion_profile(as_int64(groups[1].invariants), 16) == oracle.ker);
    CHECK(groups[2].trivial());
    CHECK(groups[3].trivial());
    for (std::size_t t = 1; t < groups[0].invariants.size(); ++t) {
      CHECK(groups[0].invariants[t] % groups[0].invariants[t - 1] == 0);
    }
  }
}
