#pragma once

// The functor H_phi on pairs of pointed sets and the simplicial abelian group
// it yields by composing with the boundary-pair functor on intervals: the
// Dold-Kan image of the two-term complex phi: A -> B. Homotopy groups are
// computed by brute-force enumeration of spherical simplices.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "absarith/gamma_core.hpp"
#include "absarith/types.hpp"

namespace absarith {

/// Z/m_1 x ... x Z/m_r with every m_i >= 2; the empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  using Element = std::vector<std::int64_t>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint64_t order() const;

  Element zero() const { return Element(orders_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(std::int64_t n, const Element& a) const;
  bool contains(const Element& a) const;

  /// Mixed-radix index (first coordinate fastest) and its inverse.
  std::uint64_t index_of(const Element& a) const;
  Element element_at(std::uint64_t index) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

class GroupHom {
 public:
  /// images[i] is the image of the i-th generator; m_i * images[i] must vanish.
  GroupHom(FiniteAbelianGroup domain, FiniteAbelianGroup codomain, std::vector<FiniteAbelianGroup::Element> images);

  static GroupHom zero(FiniteAbelianGroup domain, FiniteAbelianGroup codomain);
  static GroupHom identity(FiniteAbelianGroup group);

  const FiniteAbelianGroup& domain() const { return domain_; }
  const FiniteAbelianGroup& codomain() const { return codomain_; }
  const std::vector<FiniteAbelianGroup::Element>& images() const { return images_; }

  FiniteAbelianGroup::Element operator()(const FiniteAbelianGroup::Element& a) const;

 private:
  FiniteAbelianGroup domain_;
  FiniteAbelianGroup codomain_;
  std::vector<FiniteAbelianGroup::Element> images_;
};

/// A pointed set X = {0..size} with a subset Y containing the base point.
class PairOfPointedSets {
 public:
  PairOfPointedSets(std::size_t size, const std::vector<std::size_t>& subset);

  std::size_t size() const { return in_y_.size() - 1; }
  bool in_subset(std::size_t x) const { return in_y_.at(x) != 0; }

  friend bool operator==(const PairOfPointedSets&, const PairOfPointedSets&) = default;

 private:
  std::vector<char> in_y_;
};

/// (X ∧ k+, Y ∧ k+), with (x, j) at index (x-1)*k + j.
PairOfPointedSets smash_pair(const PairOfPointedSets& pair, std::size_t k);

/// f(Y) ⊆ Y'.
bool is_map_of_pairs(const PointedMap& f, const PairOfPointedSets& src, const PairOfPointedSets& dst);

/// psi(x) in A for x outside Y, in B for x in Y \ {0}; values[0] is empty.
struct HPhiElement {
  std::vector<FiniteAbelianGroup::Element> values;
  friend bool operator==(const HPhiElement&, const HPhiElement&) = default;
};

bool is_valid(const GroupHom& hom, const PairOfPointedSets& pair, const HPhiElement& psi);
HPhiElement zero_element(const GroupHom& hom, const PairOfPointedSets& pair);
HPhiElement add(const GroupHom& hom, const PairOfPointedSets& pair, const HPhiElement& a, const HPhiElement& b);

/// H_phi(f): sums in A over preimages outside Y'; over Y' \ {0} the sum in B of
/// p(psi(x)), with p = phi on A and the identity on B.
HPhiElement h_phi_map(const GroupHom& hom, const PairOfPointedSets& src, const PairOfPointedSets& dst,
                      const PointedMap& f, const HPhiElement& psi);

/// A non-decreasing map theta: [m] -> [n].
class MonotoneMap {
 public:
  MonotoneMap(std::vector<std::size_t> values, std::size_t target);

  /// delta_j: [n-1] -> [n], missing j.
  static MonotoneMap coface(std::size_t n, std::size_t j);
  /// sigma_j: [n+1] -> [n], hitting j twice.
  static MonotoneMap codegeneracy(std::size_t n, std::size_t j);

  std::size_t source() const { return values_.size() - 1; }
  std::size_t target() const { return target_; }
  std::size_t operator()(std::size_t i) const { return values_.at(i); }
  const std::vector<std::size_t>& values() const { return values_; }

  /// The interval map theta*: [n]* -> [m]*, j <= theta(i) iff theta*(j) <= i.
  PointedMap dual() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  std::vector<std::size_t> values_;
  std::size_t target_;
};

/// this after rhs.
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

/// The pair (X, Y) = ([n]*, {0, n+1}) based at 0.
PairOfPointedSets boundary_pair(std::size_t n);

struct LevelDescriptor {
  std::size_t n = 0;
  Integer cardinality;  // |B| * |A|^n
  bool enumerable = false;
  PairOfPointedSets pair;
};

constexpr std::uint64_t kDefaultLevelCap = 1'000'000;

/// Level n is B x A^n: psi_1..psi_n in A, psi_{n+1} in B.
LevelDescriptor simplicial_level(std::size_t n, const GroupHom& hom, std::uint64_t cap = kDefaultLevelCap);

/// Calls visit on every element of level n in index order. CapExceeded above cap.
void for_each_in_level(std::size_t n, const GroupHom& hom, const std::function<void(const HPhiElement&)>& visit,
                       std::uint64_t cap = kDefaultLevelCap);
std::vector<HPhiElement> enumerate_level(std::size_t n, const GroupHom& hom, std::uint64_t cap = kDefaultLevelCap);

/// Simplicial degree of a level element.
std::size_t level_of(const HPhiElement& psi);

/// A(theta) = H_phi(boundary(theta*)) from level theta.target() to level theta.source().
HPhiElement simplicial_action(const GroupHom& hom, const MonotoneMap& theta, const HPhiElement& psi);

/// d_j = A(delta_j), j in 0..n. DomainError out of range.
HPhiElement face(const GroupHom& hom, std::size_t j, const HPhiElement& psi);
/// s_j = A(sigma_j), j in 0..n.
HPhiElement degeneracy(const GroupHom& hom, std::size_t j, const HPhiElement& psi);

struct HomotopyGroup {
  std::size_t n = 0;
  std::vector<Integer> invariants;    // Smith normal form diagonal entries > 1
  std::uint64_t order = 1;
  std::uint64_t spherical_count = 0;  // spherical n-simplices before quotienting
  bool trivial() const { return order == 1; }
};

/// pi_0 .. pi_{n_max} by brute force over spherical simplices and the homotopy
/// relation realised by (n+1)-simplices. Throws DomainError if that relation
/// fails to be an equivalence relation and CapExceeded past `cap`.
std::vector<HomotopyGroup> homotopy_groups(const GroupHom& hom, std::size_t n_max,
                                           std::uint64_t cap = kDefaultLevelCap);

}  // namespace absarith
