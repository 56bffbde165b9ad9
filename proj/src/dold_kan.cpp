#include "absarith/dold_kan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

#include "absarith/smith.hpp"

namespace absarith {

namespace {

using Element = FiniteAbelianGroup::Element;

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

// ---------------------------------------------------------------------------
// Groups and homomorphisms

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (std::int64_t m : orders_) {
    if (m < 2) throw DomainError("cyclic factor orders must be at least 2");
  }
}

std::uint64_t FiniteAbelianGroup::order() const {
  std::uint64_t n = 1;
  for (std::int64_t m : orders_) n *= static_cast<std::uint64_t>(m);
  return n;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = mod(a[i] + b[i], orders_[i]);
  return out;
}

Element FiniteAbelianGroup::neg(const Element& a) const {
  Element out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = mod(-a[i], orders_[i]);
  return out;
}

Element FiniteAbelianGroup::scale(std::int64_t n, const Element& a) const {
  Element out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = mod(mod(n, orders_[i]) * a[i], orders_[i]);
  return out;
}

bool FiniteAbelianGroup::contains(const Element& a) const {
  if (a.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (a[i] < 0 || a[i] >= orders_[i]) return false;
  }
  return true;
}

std::uint64_t FiniteAbelianGroup::index_of(const Element& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) idx = idx * static_cast<std::uint64_t>(orders_[i]) + a[i];
  return idx;
}

Element FiniteAbelianGroup::element_at(std::uint64_t index) const {
  Element out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(orders_[i]);
    out[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return out;
}

GroupHom::GroupHom(FiniteAbelianGroup domain, FiniteAbelianGroup codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.rank()) {
    throw DomainError("homomorphism needs one image per domain generator");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].size() != codomain_.rank()) throw DomainError("generator image has the wrong length");
    for (std::size_t j = 0; j < images_[i].size(); ++j) images_[i][j] = mod(images_[i][j], codomain_.orders()[j]);
    const Element killed = codomain_.scale(domain_.orders()[i], images_[i]);
    if (killed != codomain_.zero()) {
      throw DomainError("generator " + std::to_string(i) + " image order does not divide " +
                        std::to_string(domain_.orders()[i]));
    }
  }
}

GroupHom GroupHom::zero(FiniteAbelianGroup domain, FiniteAbelianGroup codomain) {
  std::vector<Element> images(domain.rank(), codomain.zero());
  return GroupHom(std::move(domain), std::move(codomain), std::move(images));
}

GroupHom GroupHom::identity(FiniteAbelianGroup group) {
  std::vector<Element> images(group.rank(), group.zero());
  for (std::size_t i = 0; i < group.rank(); ++i) images[i][i] = 1;
  return GroupHom(group, group, std::move(images));
}

Element GroupHom::operator()(const Element& a) const {
  Element out = codomain_.zero();
  for (std::size_t i = 0; i < images_.size(); ++i) out = codomain_.add(out, codomain_.scale(a[i], images_[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Pairs and H_phi

PairOfPointedSets::PairOfPointedSets(std::size_t size, const std::vector<std::size_t>& subset)
    : in_y_(size + 1, 0) {
  for (std::size_t y : subset) {
    if (y > size) throw DomainError("pair: subset index outside the pointed set");
    in_y_[y] = 1;
  }
  if (!in_y_[0]) throw DomainError("pair: subset must contain the base point");
}

PairOfPointedSets smash_pair(const PairOfPointedSets& pair, std::size_t k) {
  std::vector<std::size_t> subset{0};
  for (std::size_t x = 1; x <= pair.size(); ++x) {
    if (!pair.in_subset(x)) continue;
    for (std::size_t j = 1; j <= k; ++j) subset.push_back((x - 1) * k + j);
  }
  return PairOfPointedSets(pair.size() * k, subset);
}

bool is_map_of_pairs(const PointedMap& f, const PairOfPointedSets& src, const PairOfPointedSets& dst) {
  if (f.domain_size() != src.size() || f.codomain_size() != dst.size()) return false;
  for (std::size_t x = 0; x <= src.size(); ++x) {
    if (src.in_subset(x) && !dst.in_subset(f(x))) return false;
  }
  return true;
}

bool is_valid(const GroupHom& hom, const PairOfPointedSets& pair, const HPhiElement& psi) {
  if (psi.values.size() != pair.size() + 1 || !psi.values[0].empty()) return false;
  for (std::size_t x = 1; x <= pair.size(); ++x) {
    const auto& group = pair.in_subset(x) ? hom.codomain() : hom.domain();
    if (!group.contains(psi.values[x])) return false;
  }
  return true;
}

HPhiElement zero_element(const GroupHom& hom, const PairOfPointedSets& pair) {
  HPhiElement out;
  out.values.resize(pair.size() + 1);
  for (std::size_t x = 1; x <= pair.size(); ++x) {
    out.values[x] = pair.in_subset(x) ? hom.codomain().zero() : hom.domain().zero();
  }
  return out;
}

HPhiElement add(const GroupHom& hom, const PairOfPointedSets& pair, const HPhiElement& a, const HPhiElement& b) {
  HPhiElement out;
  out.values.resize(pair.size() + 1);
  for (std::size_t x = 1; x <= pair.size(); ++x) {
    const auto& group = pair.in_subset(x) ? hom.codomain() : hom.domain();
    out.values[x] = group.add(a.values[x], b.values[x]);
  }
  return out;
}

HPhiElement h_phi_map(const GroupHom& hom, const PairOfPointedSets& src, const PairOfPointedSets& dst,
                      const PointedMap& f, const HPhiElement& psi) {
  if (!is_map_of_pairs(f, src, dst)) throw DomainError("h_phi_map: f is not a map of pairs");
  if (!is_valid(hom, src, psi)) throw DomainError("h_phi_map: element does not belong to H_phi(X, Y)");
  HPhiElement out = zero_element(hom, dst);
  for (std::size_t x = 1; x <= src.size(); ++x) {
    const std::size_t y = f(x);
    if (y == 0) continue;
    if (!dst.in_subset(y)) {
      // x lies outside Y because f is a map of pairs.
      out.values[y] = hom.domain().add(out.values[y], psi.values[x]);
    } else {
      const Element pushed = src.in_subset(x) ? psi.values[x] : hom(psi.values[x]);
      out.values[y] = hom.codomain().add(out.values[y], pushed);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial structure

MonotoneMap::MonotoneMap(std::vector<std::size_t> values, std::size_t target)
    : values_(std::move(values)), target_(target) {
  if (values_.empty()) throw DomainError("monotone map needs a nonempty source");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > target_) throw DomainError("monotone map value outside target");
    if (i > 0 && values_[i] < values_[i - 1]) throw DomainError("map is not monotone");
  }
}

MonotoneMap MonotoneMap::coface(std::size_t n, std::size_t j) {
  if (n == 0 || j > n) throw DomainError("coface index out of range");
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i < j ? i : i + 1;
  return MonotoneMap(std::move(v), n);
}

MonotoneMap MonotoneMap::codegeneracy(std::size_t n, std::size_t j) {
  if (j > n) throw DomainError("codegeneracy index out of range");
  std::vector<std::size_t> v(n + 2);
  for (std::size_t i = 0; i < n + 2; ++i) v[i] = i <= j ? i : i - 1;
  return MonotoneMap(std::move(v), n);
}

PointedMap MonotoneMap::dual() const {
  const std::size_t m = source(), n = target_;
  std::vector<std::size_t> img(n + 2);
  for (std::size_t j = 0; j <= n + 1; ++j) {
    std::size_t image = m + 1;
    for (std::size_t i = 0; i <= m; ++i) {
      if (values_[i] >= j) {
        image = i;
        break;
      }
    }
    img[j] = image;
  }
  return PointedMap(std::move(img), m + 1);
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  if (inner.target() != outer.source()) throw DomainError("compose: monotone maps do not chain");
  std::vector<std::size_t> v(inner.source() + 1);
  for (std::size_t i = 0; i <= inner.source(); ++i) v[i] = outer(inner(i));
  return MonotoneMap(std::move(v), outer.target());
}

PairOfPointedSets boundary_pair(std::size_t n) { return PairOfPointedSets(n + 1, {0, n + 1}); }

LevelDescriptor simplicial_level(std::size_t n, const GroupHom& hom, std::uint64_t cap) {
  Integer card = hom.codomain().order();
  for (std::size_t i = 0; i < n; ++i) card *= hom.domain().order();
  const bool enumerable = card <= cap;
  return LevelDescriptor{n, card, enumerable, boundary_pair(n)};
}

void for_each_in_level(std::size_t n, const GroupHom& hom, const std::function<void(const HPhiElement&)>& visit,
                       std::uint64_t cap) {
  const LevelDescriptor level = simplicial_level(n, hom, cap);
  if (!level.enumerable) {
    throw CapExceeded("level " + std::to_string(n) + " has " + level.cardinality.str() + " elements, cap is " +
                      std::to_string(cap));
  }
  const std::uint64_t total = level.cardinality.convert_to<std::uint64_t>();
  const std::uint64_t order_a = hom.domain().order(), order_b = hom.codomain().order();
  HPhiElement psi;
  psi.values.resize(n + 2);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    psi.values[n + 1] = hom.codomain().element_at(rest % order_b);
    rest /= order_b;
    for (std::size_t i = 1; i <= n; ++i) {
      psi.values[i] = hom.domain().element_at(rest % order_a);
      rest /= order_a;
    }
    visit(psi);
  }
}

std::vector<HPhiElement> enumerate_level(std::size_t n, const GroupHom& hom, std::uint64_t cap) {
  std::vector<HPhiElement> out;
  for_each_in_level(n, hom, [&](const HPhiElement& psi) { out.push_back(psi); }, cap);
  return out;
}

std::size_t level_of(const HPhiElement& psi) {
  if (psi.values.size() < 2) throw DomainError("not a simplicial level element");
  return psi.values.size() - 2;
}

HPhiElement simplicial_action(const GroupHom& hom, const MonotoneMap& theta, const HPhiElement& psi) {
  const std::size_t n = level_of(psi);
  if (theta.target() != n) throw DomainError("simplicial_action: theta does not end at the element's level");
  return h_phi_map(hom, boundary_pair(n), boundary_pair(theta.source()), theta.dual(), psi);
}

HPhiElement face(const GroupHom& hom, std::size_t j, const HPhiElement& psi) {
  const std::size_t n = level_of(psi);
  if (n == 0 || j > n) throw DomainError("face index out of range");
  return simplicial_action(hom, MonotoneMap::coface(n, j), psi);
}

HPhiElement degeneracy(const GroupHom& hom, std::size_t j, const HPhiElement& psi) {
  const std::size_t n = level_of(psi);
  if (j > n) throw DomainError("degeneracy index out of range");
  return simplicial_action(hom, MonotoneMap::codegeneracy(n, j), psi);
}

// ---------------------------------------------------------------------------
// Homotopy groups

namespace {

std::uint64_t level_index(const GroupHom& hom, const HPhiElement& psi) {
  const std::size_t n = level_of(psi);
  std::uint64_t idx = 0;
  for (std::size_t i = n; i >= 1; --i) idx = idx * hom.domain().order() + hom.domain().index_of(psi.values[i]);
  return idx * hom.codomain().order() + hom.codomain().index_of(psi.values[n + 1]);
}

bool all_zero(const GroupHom& hom, const HPhiElement& psi) {
  return psi == zero_element(hom, boundary_pair(level_of(psi)));
}

// Invariant factors of a finite abelian group given by its addition table,
// via a Schreier presentation on a greedy generating set.
std::vector<Integer> invariants_from_table(const std::vector<std::vector<std::size_t>>& add_table,
                                           std::size_t zero) {
  const std::size_t order = add_table.size();
  std::vector<std::size_t> gens;
  std::vector<char> covered(order, 0);
  covered[zero] = 1;
  auto close = [&] {
    std::queue<std::size_t> todo;
    for (std::size_t q = 0; q < order; ++q) {
      if (covered[q]) todo.push(q);
    }
    while (!todo.empty()) {
      const std::size_t q = todo.front();
      todo.pop();
      for (std::size_t g : gens) {
        const std::size_t r = add_table[q][g];
        if (!covered[r]) {
          covered[r] = 1;
          todo.push(r);
        }
      }
    }
  };
  for (std::size_t q = 0; q < order; ++q) {
    if (covered[q]) continue;
    gens.push_back(q);
    close();
  }
  if (gens.empty()) return {};

  // Spanning tree words.
  const std::size_t g = gens.size();
  std::vector<std::vector<Integer>> word(order);
  word[zero] = std::vector<Integer>(g, 0);
  std::queue<std::size_t> todo;
  todo.push(zero);
  while (!todo.empty()) {
    const std::size_t q = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < g; ++i) {
      const std::size_t r = add_table[q][gens[i]];
      if (!word[r].empty()) continue;
      word[r] = word[q];
      word[r][i] += 1;
      todo.push(r);
    }
  }
  IntMatrix relations;
  for (std::size_t q = 0; q < order; ++q) {
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<Integer> rel = word[q];
      rel[i] += 1;
      const auto& target = word[add_table[q][gens[i]]];
      for (std::size_t c = 0; c < g; ++c) rel[c] -= target[c];
      if (std::any_of(rel.begin(), rel.end(), [](const Integer& v) { return v != 0; })) {
        relations.push_back(std::move(rel));
      }
    }
  }
  return invariant_factors(relations, g);
}

}  // namespace

std::vector<HomotopyGroup> homotopy_groups(const GroupHom& hom, std::size_t n_max, std::uint64_t cap) {
  std::vector<HomotopyGroup> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    // Spherical n-simplices: every face is the base point.
    std::vector<HPhiElement> spherical;
    for_each_in_level(
        n, hom,
        [&](const HPhiElement& psi) {
          for (std::size_t j = 0; n > 0 && j <= n; ++j) {
            if (!all_zero(hom, face(hom, j, psi))) return;
          }
          spherical.push_back(psi);
        },
        cap);

    HomotopyGroup group;
    group.n = n;
    group.spherical_count = spherical.size();
    if (spherical.size() == 1) {
      out.push_back(group);
      continue;
    }

    std::unordered_map<std::uint64_t, std::size_t> position;
    for (std::size_t i = 0; i < spherical.size(); ++i) position.emplace(level_index(hom, spherical[i]), i);
    const std::size_t s = spherical.size();

    // x R y iff some z has d_j z = s_{n-1} d_j x = * (j < n), d_n z = x, d_{n+1} z = y.
    std::vector<std::vector<char>> related(s, std::vector<char>(s, 0));
    for_each_in_level(
        n + 1, hom,
        [&](const HPhiElement& z) {
          for (std::size_t j = 0; j < n; ++j) {
            if (!all_zero(hom, face(hom, j, z))) return;
          }
          const auto x = position.find(level_index(hom, face(hom, n, z)));
          const auto y = position.find(level_index(hom, face(hom, n + 1, z)));
          if (x == position.end() || y == position.end()) return;  // not a homotopy between spherical simplices
          related[x->second][y->second] = 1;
        },
        cap);

    for (std::size_t a = 0; a < s; ++a) {
      if (!related[a][a]) throw DomainError("homotopy relation is not reflexive");
      for (std::size_t b = 0; b < s; ++b) {
        if (related[a][b] != related[b][a]) throw DomainError("homotopy relation is not symmetric");
        if (!related[a][b]) continue;
        for (std::size_t c = 0; c < s; ++c) {
          if (related[b][c] && !related[a][c]) throw DomainError("homotopy relation is not transitive");
        }
      }
    }

    std::vector<std::size_t> class_of(s, s);
    std::vector<std::size_t> representative;
    for (std::size_t a = 0; a < s; ++a) {
      if (class_of[a] != s) continue;
      for (std::size_t b = 0; b < s; ++b) {
        if (related[a][b]) class_of[b] = representative.size();
      }
      representative.push_back(a);
    }
    const std::size_t classes = representative.size();
    const auto pair = boundary_pair(n);
    std::size_t zero_class = s;
    for (std::size_t a = 0; a < s; ++a) {
      if (all_zero(hom, spherical[a])) zero_class = class_of[a];
    }
    std::vector<std::vector<std::size_t>> table(classes, std::vector<std::size_t>(classes));
    for (std::size_t p = 0; p < classes; ++p) {
      for (std::size_t q = 0; q < classes; ++q) {
        const HPhiElement sum = add(hom, pair, spherical[representative[p]], spherical[representative[q]]);
        table[p][q] = class_of[position.at(level_index(hom, sum))];
      }
    }
    group.invariants = invariants_from_table(table, zero_class);
    group.order = classes;
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace absarith
