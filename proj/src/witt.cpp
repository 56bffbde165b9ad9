#include "absarith/witt.hpp"

#include <sstream>

#include "absarith/number_theory.hpp"

namespace absarith {

namespace {

void require_positive_index(std::int64_t n, const char* what) {
  if (n <= 0) throw DomainError(std::string(what) + ": index must be positive");
}

}  // namespace

WittElement::WittElement(Coeffs coeffs) {
  for (const auto& [k, c] : coeffs) add_term(k, c);
}

WittElement::WittElement(std::initializer_list<std::pair<const std::int64_t, Integer>> init) {
  for (const auto& [k, c] : init) add_term(k, c);
}

WittElement WittElement::cyclic(std::int64_t k) { return WittElement{{k, Integer(1)}}; }

void WittElement::add_term(std::int64_t k, const Integer& c) {
  require_positive_index(k, "WittElement");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Integer WittElement::coeff(std::int64_t k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

bool WittElement::is_effective() const {
  for (const auto& [k, c] : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

std::int64_t WittElement::max_order() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

WittElement& WittElement::operator+=(const WittElement& rhs) {
  for (const auto& [k, c] : rhs.coeffs_) add_term(k, c);
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& rhs) {
  for (const auto& [k, c] : rhs.coeffs_) add_term(k, -c);
  return *this;
}

WittElement operator-(const WittElement& a) {
  WittElement out;
  for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

WittElement operator*(const WittElement& a, const WittElement& b) {
  WittElement out;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      out.add_term(lcm(ka, kb), ca * cb * gcd(ka, kb));
    }
  }
  return out;
}

WittElement operator*(const Integer& n, const WittElement& w) {
  WittElement out;
  for (const auto& [k, c] : w.coeffs_) out.add_term(k, n * c);
  return out;
}

std::string to_string(const WittElement& w) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, c] : w.coeffs()) {
    if (!first) os << ", ";
    first = false;
    os << k << ':' << c;
  }
  os << '}';
  return os.str();
}

WittElement tau(const PointedEndo& t) {
  WittElement::Coeffs coeffs;
  for (const auto& [len, count] : cycle_type(t)) {
    coeffs.emplace(static_cast<std::int64_t>(len), Integer(count));
  }
  return WittElement(std::move(coeffs));
}

Integer ghost(const WittElement& w, std::int64_t n) {
  require_positive_index(n, "ghost");
  Integer total = 0;
  for (const auto& [k, c] : w.coeffs()) {
    if (k > n) break;
    if (n % k == 0) total += c * k;
  }
  return total;
}

GhostVector ghost_vector(const WittElement& w, std::int64_t n) {
  GhostVector out;
  for (std::int64_t d : divisors(n)) out.emplace(d, ghost(w, d));
  return out;
}

WittElement from_ghost(const GhostVector& values) {
  for (const auto& [n, v] : values) {
    require_positive_index(n, "from_ghost");
    for (std::int64_t d : divisors(n)) {
      if (!values.contains(d)) {
        throw DomainError("from_ghost: ghost vector missing divisor " + std::to_string(d) + " of " +
                          std::to_string(n));
      }
    }
  }
  WittElement::Coeffs coeffs;
  for (const auto& [k, unused] : values) {
    Integer sum = 0;
    for (std::int64_t d : divisors(k)) sum += mobius(k / d) * values.at(d);
    if (sum % k != 0) {
      throw DomainError("from_ghost: inconsistent ghost vector, m(" + std::to_string(k) + ") = " + sum.str() +
                        "/" + std::to_string(k) + " is not an integer");
    }
    coeffs.emplace(k, sum / k);
  }
  return WittElement(std::move(coeffs));
}

WittElement frobenius(std::int64_t n, const WittElement& w) {
  require_positive_index(n, "frobenius");
  WittElement out;
  for (const auto& [k, c] : w.coeffs()) {
    const std::int64_t g = gcd(n, k);
    out += WittElement{{k / g, c * g}};
  }
  return out;
}

WittElement verschiebung(std::int64_t n, const WittElement& w) {
  require_positive_index(n, "verschiebung");
  WittElement::Coeffs coeffs;
  for (const auto& [k, c] : w.coeffs()) coeffs.emplace(n * k, c);
  return WittElement(std::move(coeffs));
}

std::map<std::int64_t, Integer> to_primitive_basis(const WittElement& w) {
  std::map<std::int64_t, Integer> out;
  for (const auto& [k, c] : w.coeffs()) {
    for (std::int64_t u : divisors(k)) {
      auto& slot = out[u];
      slot += c;
      if (slot == 0) out.erase(u);
    }
  }
  return out;
}

WittElement from_primitive_basis(const std::map<std::int64_t, Integer>& c) {
  WittElement out;
  for (const auto& [n, cn] : c) {
    require_positive_index(n, "from_primitive_basis");
    for (std::int64_t d : divisors(n)) {
      const int mu = mobius(n / d);
      if (mu != 0) out += WittElement{{d, cn * mu}};
    }
  }
  return out;
}

}  // namespace absarith
