#include "absarith/gamma_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace absarith {

PointedMap::PointedMap(std::vector<std::size_t> images, std::size_t codomain_size)
    : images_(std::move(images)), codomain_size_(codomain_size) {
  if (images_.empty() || images_[0] != 0) {
    throw DomainError("pointed map must send the base point 0 to 0");
  }
  for (std::size_t v : images_) {
    if (v > codomain_size_) {
      throw DomainError("pointed map image " + std::to_string(v) + " outside codomain of size " +
                        std::to_string(codomain_size_));
    }
  }
}

PointedMap PointedMap::identity(std::size_t n) {
  std::vector<std::size_t> img(n + 1);
  for (std::size_t i = 0; i <= n; ++i) img[i] = i;
  return PointedMap(std::move(img), n);
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  if (f.codomain_size() != g.domain_size()) {
    throw DomainError("compose: codomain of f does not match domain of g");
  }
  std::vector<std::size_t> img(f.domain_size() + 1);
  for (std::size_t x = 0; x <= f.domain_size(); ++x) img[x] = g(f(x));
  return PointedMap(std::move(img), g.codomain_size());
}

PointedMap smash(const PointedMap& f, const PointedMap& g) {
  const std::size_t n = f.domain_size(), m = g.domain_size();
  const std::size_t n2 = f.codomain_size(), m2 = g.codomain_size();
  std::vector<std::size_t> img(n * m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t fi = f(i), gj = g(j);
      img[(i - 1) * m + j] = (fi == 0 || gj == 0) ? 0 : (fi - 1) * m2 + gj;
    }
  }
  return PointedMap(std::move(img), n2 * m2);
}

PointedEndo::PointedEndo(std::vector<std::size_t> images)
    : map_([&] {
        const std::size_t n = images.empty() ? 0 : images.size() - 1;
        return PointedMap(std::move(images), n);
      }()) {}

PointedEndo::PointedEndo(PointedMap map) : map_(std::move(map)) {
  if (map_.domain_size() != map_.codomain_size()) {
    throw DomainError("endomorphism must have equal domain and codomain");
  }
}

PointedEndo PointedEndo::identity(std::size_t n) { return PointedEndo(PointedMap::identity(n)); }

PointedEndo PointedEndo::cyclic(std::size_t k) {
  std::vector<std::size_t> img(k + 1, 0);
  for (std::size_t i = 1; i <= k; ++i) img[i] = i == k ? 1 : i + 1;
  return PointedEndo(std::move(img));
}

PointedEndo PointedEndo::null(std::size_t n) { return PointedEndo(std::vector<std::size_t>(n + 1, 0)); }

PointedEndo wedge(const PointedEndo& s, const PointedEndo& t) {
  const std::size_t ns = s.size(), nt = t.size();
  std::vector<std::size_t> img(ns + nt + 1, 0);
  for (std::size_t i = 1; i <= ns; ++i) img[i] = s(i);
  for (std::size_t j = 1; j <= nt; ++j) img[ns + j] = t(j) == 0 ? 0 : ns + t(j);
  return PointedEndo(std::move(img));
}

PointedEndo smash(const PointedEndo& s, const PointedEndo& t) { return PointedEndo(smash(s.map(), t.map())); }

PointedEndo power(const PointedEndo& t, std::size_t n) {
  PointedMap acc = PointedMap::identity(t.size());
  for (std::size_t i = 0; i < n; ++i) acc = compose(t.map(), acc);
  return PointedEndo(std::move(acc));
}

EventualImage eventual_image(const PointedEndo& t) {
  const std::size_t n = t.size();
  std::vector<char> current(n + 1, 1);
  for (;;) {
    std::vector<char> next(n + 1, 0);
    for (std::size_t x = 0; x <= n; ++x) {
      if (current[x]) next[t(x)] = 1;
    }
    if (next == current) break;
    current = std::move(next);
  }
  std::vector<std::size_t> subset;
  std::vector<std::size_t> position(n + 1, 0);
  for (std::size_t x = 0; x <= n; ++x) {
    if (!current[x]) continue;
    position[x] = subset.size();
    subset.push_back(x);
  }
  std::vector<std::size_t> img(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) img[i] = position[t(subset[i])];
  return EventualImage{std::move(subset), PointedEndo(std::move(img))};
}

std::int64_t trace(const PointedEndo& t, std::size_t n) {
  if (n == 0) throw DomainError("trace: power must be positive");
  std::int64_t fixed = 0;
  for (std::size_t x = 0; x <= t.size(); ++x) {
    std::size_t y = x;
    for (std::size_t i = 0; i < n; ++i) y = t(y);
    if (y == x) ++fixed;
  }
  return fixed - 1;
}

CycleType cycle_type(const PointedEndo& t) {
  const EventualImage ev = eventual_image(t);
  const PointedEndo& perm = ev.perm;
  CycleType out;
  std::vector<char> seen(perm.size() + 1, 0);
  for (std::size_t start = 1; start <= perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = perm(x)) {
      seen[x] = 1;
      ++len;
    }
    ++out[len];
  }
  return out;
}

PointedMap collapse(PointedSet x, std::span<const std::size_t> y) {
  std::vector<char> in_y(x.size + 1, 0);
  for (std::size_t v : y) {
    if (v > x.size) throw DomainError("collapse: index outside the pointed set");
    in_y[v] = 1;
  }
  if (!in_y[0]) throw DomainError("collapse: collapsed subset must contain the base point");
  std::vector<std::size_t> img(x.size + 1, 0);
  std::size_t next = 0;
  for (std::size_t v = 1; v <= x.size; ++v) {
    if (!in_y[v]) img[v] = ++next;
  }
  return PointedMap(std::move(img), next);
}

NormedVectorConfig NormedVectorConfig::make(double alpha, double lambda, double tolerance) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1] for the filtration to be functorial");
  }
  return unrestricted(alpha, lambda, tolerance);
}

NormedVectorConfig NormedVectorConfig::unrestricted(double alpha, double lambda, double tolerance) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  return NormedVectorConfig{alpha, lambda, tolerance};
}

bool norm_filtered_member(std::span<const double> phi, const NormedVectorConfig& cfg) {
  double total = 0.0;
  for (double v : phi) total += std::pow(std::abs(v), cfg.alpha);
  return total <= cfg.lambda + cfg.tolerance;
}

bool norm_filtered_member(std::span<const Rational> phi, const Rational& lambda) {
  Rational total = 0;
  for (const auto& v : phi) total += abs(v);
  return total <= lambda;
}

FoldCounterexample fold_counterexample(double alpha) {
  const auto cfg = NormedVectorConfig::unrestricted(alpha, 2.0, 0.0);
  const std::vector<double> phi{1.0, 1.0};
  const PointedMap fold({0, 1, 1}, 1);
  const auto image = push_forward<double>(phi, fold);
  return FoldCounterexample{alpha, 2.0, std::pow(std::abs(image[0]), alpha), norm_filtered_member(phi, cfg),
                            norm_filtered_member(image, cfg)};
}

}  // namespace absarith
