#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "absarith/gamma_core.hpp"
#include "support.hpp"

using namespace absarith;

namespace {

// Cycle type from scratch: follow orbits of every point, keep the ones that
// come back to themselves and are not the base point.
CycleType brute_cycle_type(const PointedEndo& t) {
  const std::size_t n = t.size();
  std::set<std::size_t> periodic;
  for (std::size_t x = 1; x <= n; ++x) {
    std::size_t y = x;
    for (std::size_t i = 0; i <= n; ++i) {
      y = t(y);
      if (y == x) {
        periodic.insert(x);
        break;
      }
    }
  }
  CycleType out;
  std::set<std::size_t> seen;
  for (std::size_t x : periodic) {
    if (seen.count(x)) continue;
    std::size_t len = 0, y = x;
    do {
      seen.insert(y);
      y = t(y);
      ++len;
    } while (y != x);
    ++out[len];
  }
  return out;
}

PointedEndo cyc(std::size_t k) { return PointedEndo::cyclic(k); }

}  // namespace

TEST_CASE("pointed maps validate the base point and range") {
  CHECK_THROWS_AS(PointedMap({1, 0}, 1), DomainError);
  CHECK_THROWS_AS(PointedMap({0, 3}, 2), DomainError);
  CHECK_THROWS_AS(PointedEndo(PointedMap({0, 1}, 2)), DomainError);
  const PointedMap f({0, 2, 0}, 3);
  CHECK(f.domain_size() == 2);
  CHECK(f.codomain_size() == 3);
}

TEST_CASE("wedge") {
  CHECK(wedge(PointedEndo::identity(1), PointedEndo::identity(1)) == PointedEndo::identity(2));
  CHECK(cycle_type(wedge(cyc(2), cyc(3))) == CycleType{{2, 1}, {3, 1}});
  const PointedEndo w = wedge(cyc(2), PointedEndo({0, 0, 1}));
  CHECK(std::vector<std::size_t>(w.images().begin(), w.images().end()) == std::vector<std::size_t>{0, 2, 1, 0, 3});
}

TEST_CASE("smash") {
  CHECK(cycle_type(smash(cyc(2), cyc(3))) == CycleType{{6, 1}});
  CHECK(cycle_type(smash(cyc(2), cyc(2))) == CycleType{{2, 2}});
  testgen::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const PointedEndo t = testgen::endo(rng, 0, 6);
    CHECK(smash(t, PointedEndo::identity(1)) == t);
    CHECK(smash(PointedEndo::identity(1), t) == t);
  }
  // (i, j) sits at (i-1)*N_T + j.
  const PointedEndo s({0, 2, 0});
  const PointedEndo t({0, 1, 3, 2});
  const PointedEndo st = smash(s, t);
  REQUIRE(st.size() == 6);
  for (std::size_t i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      const std::size_t si = s(i), tj = t(j);
      const std::size_t expect = (si == 0 || tj == 0) ? 0 : (si - 1) * 3 + tj;
      CHECK(st((i - 1) * 3 + j) == expect);
    }
  }
}

TEST_CASE("smash and wedge algebra up to relabelling") {
  testgen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const PointedEndo a = testgen::endo(rng, 0, 4), b = testgen::endo(rng, 0, 4), c = testgen::endo(rng, 0, 4);
    CHECK(cycle_type(smash(a, b)) == cycle_type(smash(b, a)));
    CHECK(smash(smash(a, b), c) == smash(a, smash(b, c)));  // row-major indexing is associative on the nose
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(cycle_type(smash(a, wedge(b, c))) == cycle_type(wedge(smash(a, b), smash(a, c))));
  }
}

TEST_CASE("eventual image") {
  const EventualImage null = eventual_image(PointedEndo::null(3));
  CHECK(null.subset == std::vector<std::size_t>{0});
  CHECK(null.perm == PointedEndo::identity(0));

  const PointedEndo perm({0, 3, 1, 2});
  const EventualImage all = eventual_image(perm);
  CHECK(all.subset == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(all.perm == perm);

  const EventualImage e = eventual_image(PointedEndo({0, 2, 3, 2}));
  CHECK(e.subset == std::vector<std::size_t>{0, 2, 3});
  CHECK(e.perm == PointedEndo({0, 2, 1}));

  testgen::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const PointedEndo t = testgen::endo(rng, 0, 8);
    const EventualImage ei = eventual_image(t);
    // T^N(F) for N = |F| is always the stable image.
    const PointedEndo tn = power(t, t.size() + 1);
    std::set<std::size_t> image(tn.images().begin(), tn.images().end());
    CHECK(std::vector<std::size_t>(image.begin(), image.end()) == ei.subset);
    std::vector<std::size_t> p(ei.perm.images().begin(), ei.perm.images().end());
    std::sort(p.begin(), p.end());
    std::vector<std::size_t> iota(p.size());
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(p == iota);
  }
}

TEST_CASE("trace") {
  for (std::size_t k = 0; k <= 5; ++k) CHECK(trace(PointedEndo::identity(k), 3) == static_cast<std::int64_t>(k));
  CHECK(trace(cyc(3), 3) == 3);
  CHECK(trace(cyc(3), 2) == 0);
  CHECK(trace(wedge(cyc(4), cyc(6)), 12) == 10);
  CHECK_THROWS_AS(trace(cyc(3), 0), DomainError);

  testgen::Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const PointedEndo s = testgen::endo(rng, 0, 6), t = testgen::endo(rng, 0, 6);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(trace(smash(s, t), n) == trace(s, n) * trace(t, n));
  }
}

TEST_CASE("cycle type") {
  CHECK(cycle_type(cyc(5)) == CycleType{{5, 1}});
  CHECK(cycle_type(PointedEndo::null(4)).empty());
  testgen::Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const PointedEndo t = testgen::endo(rng, 8, 8);
    const CycleType c = cycle_type(t);
    CHECK(c == brute_cycle_type(t));
    std::size_t total = 0;
    for (const auto& [k, m] : c) total += k * m;
    CHECK(total == eventual_image(t).subset.size() - 1);
  }
}

TEST_CASE("collapse") {
  const std::vector<std::size_t> base{0};
  CHECK(collapse(PointedSet{3}, base) == PointedMap::identity(3));
  const std::vector<std::size_t> y{0, 2};
  CHECK(collapse(PointedSet{3}, y) == PointedMap({0, 1, 0, 2}, 2));
  const std::vector<std::size_t> no_base{1, 2};
  CHECK_THROWS_AS(collapse(PointedSet{3}, no_base), DomainError);

  testgen::Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(testgen::uniform(rng, 0, 9));
    std::vector<std::size_t> y1{0}, y2{0};
    for (std::size_t x = 1; x <= n; ++x) {
      if (testgen::uniform(rng, 0, 2) == 0) y1.push_back(x);
      if (testgen::uniform(rng, 0, 2) == 0) y2.push_back(x);
    }
    const PointedMap q1 = collapse(PointedSet{n}, y1);
    std::vector<std::size_t> y2_image;
    for (std::size_t x : y2) y2_image.push_back(q1(x));
    const PointedMap q2 = collapse(PointedSet{q1.codomain_size()}, y2_image);
    std::vector<std::size_t> both = y1;
    both.insert(both.end(), y2.begin(), y2.end());
    CHECK(compose(q2, q1) == collapse(PointedSet{n}, both));
  }
}

TEST_CASE("norm filtration membership") {
  const std::vector<double> zero(4, 0.0);
  CHECK(norm_filtered_member(zero, NormedVectorConfig::make(0.5, 0.0)));
  const std::vector<double> phi{0.6, 0.5};
  CHECK_FALSE(norm_filtered_member(phi, NormedVectorConfig::make(1.0, 1.0)));
  CHECK(norm_filtered_member(phi, NormedVectorConfig::make(1.0, 1.1)));
  const std::vector<Rational> exact{Rational(3, 5), Rational(1, 2)};
  CHECK_FALSE(norm_filtered_member(exact, Rational(1)));
  CHECK(norm_filtered_member(exact, Rational(11, 10)));
  CHECK_THROWS_AS(NormedVectorConfig::make(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(NormedVectorConfig::make(0.0, 1.0), DomainError);
  CHECK_NOTHROW(NormedVectorConfig::unrestricted(2.0, 1.0));
}

TEST_CASE("push forward") {
  const std::vector<double> phi{1.5, -2.0, 0.25};
  CHECK(push_forward<double>(phi, PointedMap::identity(3)) == phi);
  const std::vector<double> ab{0.3, 0.4};
  const auto folded = push_forward<double>(ab, PointedMap({0, 1, 1}, 1));
  REQUIRE(folded.size() == 1);
  CHECK(folded[0] == doctest::Approx(0.7));
  CHECK(push_forward<double>(phi, PointedMap({0, 0, 1, 0}, 1)) == std::vector<double>{-2.0});
  CHECK_THROWS_AS(push_forward<double>(ab, PointedMap::identity(3)), DomainError);

  const FoldCounterexample fc = fold_counterexample(2.0);
  CHECK(fc.source_norm == 2.0);
  CHECK(fc.image_norm == 4.0);
  CHECK(fc.source_member);
  CHECK_FALSE(fc.image_member);
  CHECK(fold_counterexample(1.0).image_member);
}

TEST_CASE("push forward preserves the filtration for alpha in (0, 1]") {
  testgen::Rng rng(17);
  for (int i = 0; i < 10000; ++i) {
    const double alpha = 1.0 - testgen::uniform_real(rng, 0.0, 1.0);  // (0, 1]
    const std::size_t n = static_cast<std::size_t>(testgen::uniform(rng, 0, 6));
    const std::size_t m = static_cast<std::size_t>(testgen::uniform(rng, 0, 6));
    std::vector<double> phi(n);
    double norm = 0.0;
    for (auto& v : phi) {
      v = testgen::uniform_real(rng, -2.0, 2.0);
      norm += std::pow(std::abs(v), alpha);
    }
    const double lambda = norm * testgen::uniform_real(rng, 1.0, 1.5);
    const auto cfg = NormedVectorConfig::make(alpha, lambda);
    REQUIRE(norm_filtered_member(phi, cfg));
    CHECK(norm_filtered_member(push_forward<double>(phi, testgen::pointed_map(rng, n, m)), cfg));
  }
}
