#pragma once

// Finite pointed sets n+ = {0, 1, ..., n} (base point 0), their maps and
// endomorphisms, wedge and smash, collapse of a subset, and the
// alpha-norm filtered vector functor.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "absarith/types.hpp"

namespace absarith {

struct PointedSet {
  std::size_t size = 0;  // number of non-base points
};

class PointedMap {
 public:
  /// images[x] is f(x); images[0] must be 0 and every entry <= codomain_size.
  PointedMap(std::vector<std::size_t> images, std::size_t codomain_size);

  static PointedMap identity(std::size_t n);

  std::size_t domain_size() const { return images_.size() - 1; }
  std::size_t codomain_size() const { return codomain_size_; }
  std::size_t operator()(std::size_t x) const { return images_.at(x); }
  std::span<const std::size_t> images() const { return images_; }

  friend bool operator==(const PointedMap&, const PointedMap&) = default;

 private:
  std::vector<std::size_t> images_;
  std::size_t codomain_size_;
};

/// g after f. Throws DomainError when the sizes do not chain.
PointedMap compose(const PointedMap& g, const PointedMap& f);

/// f ∧ g on n+ ∧ m+ with non-base pair (i, j) at index (i-1)*m + j.
PointedMap smash(const PointedMap& f, const PointedMap& g);

class PointedEndo {
 public:
  explicit PointedEndo(std::vector<std::size_t> images);
  explicit PointedEndo(PointedMap map);

  static PointedEndo identity(std::size_t n);
  /// The cyclic permutation C(k): i -> i+1 on 1..k, k -> 1.
  static PointedEndo cyclic(std::size_t k);
  /// Everything sent to the base point.
  static PointedEndo null(std::size_t n);

  std::size_t size() const { return map_.domain_size(); }
  std::size_t operator()(std::size_t x) const { return map_(x); }
  std::span<const std::size_t> images() const { return map_.images(); }
  const PointedMap& map() const { return map_; }

  friend bool operator==(const PointedEndo&, const PointedEndo&) = default;

 private:
  PointedMap map_;
};

/// S ∨ T: S on 1..N_S, T shifted onto N_S+1..N_S+N_T.
PointedEndo wedge(const PointedEndo& s, const PointedEndo& t);

/// S ∧ T with row-major indexing (i-1)*N_T + j.
PointedEndo smash(const PointedEndo& s, const PointedEndo& t);

/// T^n as an endomorphism.
PointedEndo power(const PointedEndo& t, std::size_t n);

struct EventualImage {
  std::vector<std::size_t> subset;  // ascending, starts with 0
  PointedEndo perm;                 // T restricted to subset, re-indexed by position in subset
};

/// T^m(F) for the least m with T^m(F) = T^{m+1}(F).
EventualImage eventual_image(const PointedEndo& t);

/// #{x : T^n(x) = x} - 1. Throws DomainError for n = 0.
std::int64_t trace(const PointedEndo& t, std::size_t n);

using CycleType = std::map<std::size_t, std::size_t>;

/// Cycle lengths of T on its eventual image, base point excluded.
CycleType cycle_type(const PointedEndo& t);

/// The quotient map X -> X/Y: Y goes to 0, the complement is enumerated
/// 1..(|X|-|Y|) in increasing order. Throws DomainError if 0 is not in Y.
PointedMap collapse(PointedSet x, std::span<const std::size_t> y);

/// Filtration parameters: vectors phi with sum |phi(x)|^alpha <= lambda.
struct NormedVectorConfig {
  double alpha = 1.0;
  double lambda = 0.0;
  double tolerance = 1e-12;

  /// Requires 0 < alpha <= 1 and lambda >= 0 (DomainError otherwise).
  static NormedVectorConfig make(double alpha, double lambda, double tolerance = 1e-12);
  /// Accepts any alpha > 0; only for demonstrating that alpha > 1 breaks closure.
  static NormedVectorConfig unrestricted(double alpha, double lambda, double tolerance = 1e-12);
};

/// sum |phi(x)|^alpha <= lambda + tolerance.
bool norm_filtered_member(std::span<const double> phi, const NormedVectorConfig& cfg);

/// Exact alpha = 1 membership: sum |phi(x)| <= lambda.
bool norm_filtered_member(std::span<const Rational> phi, const Rational& lambda);

/// (f_* phi)(y) = sum over f(x) = y of phi(x); mass landing on the base point is dropped.
/// phi is indexed by non-base points (phi[x-1] for x = 1..N).
template <class T>
std::vector<T> push_forward(std::span<const T> phi, const PointedMap& f) {
  if (phi.size() != f.domain_size()) {
    throw DomainError("push_forward: vector length does not match map domain");
  }
  std::vector<T> out(f.codomain_size(), T(0));
  for (std::size_t x = 1; x <= f.domain_size(); ++x) {
    const std::size_t y = f(x);
    if (y != 0) out[y - 1] += phi[x - 1];
  }
  return out;
}

/// The fold of two points onto one with phi = (1, 1): the alpha-filtration
/// with lambda = 2 contains phi but not its push-forward once alpha > 1.
struct FoldCounterexample {
  double alpha;
  double source_norm;  // sum |phi|^alpha
  double image_norm;   // |2|^alpha
  bool source_member;
  bool image_member;
};
FoldCounterexample fold_counterexample(double alpha);

}  // namespace absarith
