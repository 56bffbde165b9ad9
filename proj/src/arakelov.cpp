#include "absarith/arakelov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "absarith/number_theory.hpp"

namespace absarith {

namespace {

constexpr double kPi = std::numbers::pi;

Rational pow_rational(std::int64_t p, std::int64_t e) {
  Integer pe = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(e < 0 ? -e : e));
  return e >= 0 ? Rational(pe) : Rational(Integer(1), pe);
}

double log_rational(const Rational& q) {
  // Split so that huge numerators/denominators do not overflow a double.
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  auto log_int = [](const Integer& z) {
    const auto bits = boost::multiprecision::msb(z);
    if (bits < 1000) return std::log(z.convert_to<double>());
    const unsigned shift = static_cast<unsigned>(bits - 60);
    return std::log(Integer(z >> shift).convert_to<double>()) + shift * std::numbers::ln2;
  };
  return log_int(num) - log_int(den);
}

/// 1 / exp_degree^2 as a double.
double theta_parameter(const ArakelovDivisor& d) {
  const PositiveReal e = exp_degree(d);
  if (e.exact) return to_double(Rational(1) / (*e.exact * *e.exact));
  return std::exp(-2.0 * degree(d));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 53-bit uniform in (0, 1].
double uniform_open0(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; }

constexpr std::size_t kSubstreams = 64;

}  // namespace

ArakelovDivisor::ArakelovDivisor() : arch_(ExactExp{Rational(1)}) {}

ArakelovDivisor::ArakelovDivisor(FinitePart finite, ScaleValue arch) : arch_(std::move(arch)) {
  for (const auto& [p, a] : finite) {
    if (!is_prime(p)) throw DomainError("divisor support must consist of primes, got " + std::to_string(p));
    if (a != 0) finite_.emplace(p, a);
  }
  if (const auto* e = std::get_if<ExactExp>(&arch_); e && e->r <= 0) {
    throw DomainError("exact archimedean scale must be a positive rational");
  }
  if (const auto* f = std::get_if<FloatScale>(&arch_); f && !std::isfinite(f->u)) {
    throw DomainError("archimedean coefficient must be finite");
  }
}

ArakelovDivisor ArakelovDivisor::at_infinity(double u) { return ArakelovDivisor({}, FloatScale{u}); }

ArakelovDivisor ArakelovDivisor::at_infinity_exact(const Rational& r) { return ArakelovDivisor({}, ExactExp{r}); }

ArakelovDivisor operator+(const ArakelovDivisor& a, const ArakelovDivisor& b) {
  ArakelovDivisor::FinitePart finite = a.finite_part();
  for (const auto& [p, e] : b.finite_part()) finite[p] += e;
  const auto* ea = std::get_if<ExactExp>(&a.arch_part());
  const auto* eb = std::get_if<ExactExp>(&b.arch_part());
  if (ea && eb) return ArakelovDivisor(std::move(finite), ExactExp{ea->r * eb->r});
  auto u_of = [](const ScaleValue& s) {
    if (const auto* e = std::get_if<ExactExp>(&s)) return log_rational(e->r);
    return std::get<FloatScale>(s).u;
  };
  return ArakelovDivisor(std::move(finite), FloatScale{u_of(a.arch_part()) + u_of(b.arch_part())});
}

ArakelovDivisor operator-(const ArakelovDivisor& a) {
  ArakelovDivisor::FinitePart finite;
  for (const auto& [p, e] : a.finite_part()) finite.emplace(p, -e);
  if (const auto* e = std::get_if<ExactExp>(&a.arch_part())) {
    return ArakelovDivisor(std::move(finite), ExactExp{Rational(1) / e->r});
  }
  return ArakelovDivisor(std::move(finite), FloatScale{-std::get<FloatScale>(a.arch_part()).u});
}

ArakelovDivisor principal(const Rational& q) {
  if (q == 0) throw DomainError("principal divisor of zero");
  ArakelovDivisor::FinitePart finite;
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  const Integer anum = num < 0 ? Integer(-num) : num;
  if (anum > Integer(std::numeric_limits<std::int64_t>::max()) ||
      den > Integer(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("principal: rational too large to factor");
  }
  for (const auto& [p, e] : factorize(anum.convert_to<std::int64_t>())) finite[p] += e;
  for (const auto& [p, e] : factorize(den.convert_to<std::int64_t>())) finite[p] -= e;
  return ArakelovDivisor(std::move(finite), ExactExp{Rational(1) / abs(q)});
}

Lattice1 lattice_of(const ArakelovDivisor& d) {
  Rational c = 1;
  for (const auto& [p, a] : d.finite_part()) c *= pow_rational(p, -a);
  return Lattice1{c};
}

PositiveReal arch_radius(const ArakelovDivisor& d) {
  if (const auto* e = std::get_if<ExactExp>(&d.arch_part())) return PositiveReal{e->r, to_double(e->r)};
  return PositiveReal{std::nullopt, std::exp(std::get<FloatScale>(d.arch_part()).u)};
}

PositiveReal exp_degree(const ArakelovDivisor& d) {
  Rational finite = 1;
  for (const auto& [p, a] : d.finite_part()) finite *= pow_rational(p, a);
  if (const auto* e = std::get_if<ExactExp>(&d.arch_part())) {
    const Rational v = e->r * finite;
    return PositiveReal{v, to_double(v)};
  }
  return PositiveReal{std::nullopt, std::exp(degree(d))};
}

double degree(const ArakelovDivisor& d) {
  if (const auto* e = std::get_if<ExactExp>(&d.arch_part())) {
    Rational finite = 1;
    for (const auto& [p, a] : d.finite_part()) finite *= pow_rational(p, a);
    return log_rational(e->r * finite);
  }
  double total = std::get<FloatScale>(d.arch_part()).u;
  for (const auto& [p, a] : d.finite_part()) total += static_cast<double>(a) * std::log(static_cast<double>(p));
  return total;
}

Integer count_xi_over_L(const Rational& xi_norm, const Lattice1& lattice) {
  if (xi_norm < 0) throw DomainError("count_xi_over_L: norm must be nonnegative");
  return 1 + 2 * floor(xi_norm / lattice.generator);
}

Integer count_xi_over_L(double xi_norm, const Lattice1& lattice) {
  if (!(xi_norm >= 0.0)) throw DomainError("count_xi_over_L: norm must be nonnegative");
  return 1 + 2 * Integer(static_cast<long long>(std::floor(xi_norm / to_double(lattice.generator))));
}

bool e_xi_member(std::span<const Rational> phi, const Lattice1& lattice, const Rational& xi_norm) {
  Rational total = 0;
  for (const auto& v : phi) {
    if (boost::multiprecision::denominator(Rational(v / lattice.generator)) != 1) return false;
    total += abs(v);
  }
  return total <= xi_norm;
}

std::vector<std::vector<Rational>> enumerate_e_xi(const Lattice1& lattice, std::size_t k, const RealValue& xi_norm,
                                                  std::size_t cap) {
  const auto* exact = std::get_if<Rational>(&xi_norm);
  if (!exact) throw DomainError("enumerate_e_xi: enumeration requires an exact norm bound");
  if (*exact < 0) return {};
  const Integer budget_big = floor(*exact / lattice.generator);
  if (budget_big > 1'000'000) throw CapExceeded("enumerate_e_xi: norm bound too large");
  const auto budget = budget_big.convert_to<std::int64_t>();

  std::vector<std::vector<Rational>> out;
  std::vector<std::int64_t> current(k, 0);
  // Depth-first in ascending coordinate order gives lexicographic output.
  auto recurse = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos == k) {
      if (out.size() >= cap) throw CapExceeded("enumerate_e_xi: more than " + std::to_string(cap) + " vectors");
      std::vector<Rational> v(k);
      for (std::size_t i = 0; i < k; ++i) v[i] = lattice.generator * current[i];
      out.push_back(std::move(v));
      return;
    }
    for (std::int64_t x = -remaining; x <= remaining; ++x) {
      current[pos] = x;
      self(self, pos + 1, remaining - (x < 0 ? -x : x));
    }
    current[pos] = 0;
  };
  recurse(recurse, 0, budget);
  return out;
}

ThetaValue theta_series(double t, double eps) {
  if (!(eps > 0.0)) throw DomainError("theta: eps must be positive");
  if (!(t > 0.0)) throw DomainError("theta: parameter must be positive");
  // Tail after M: sum_{m>M} e^{-pi t m^2} <= e^{-pi t (M+1)^2} / (1 - e^{-pi t (2M+3)});
  // log(1 + 2S + 2T) - log(1 + 2S) <= 2T.
  std::vector<double> terms;
  double bound = 0.0;
  for (std::int64_t m = 1;; ++m) {
    const double md = static_cast<double>(m);
    terms.push_back(std::exp(-kPi * t * md * md));
    const double next = static_cast<double>(m + 1);
    bound = 2.0 * std::exp(-kPi * t * next * next) / -std::expm1(-kPi * t * (2.0 * md + 3.0));
    if (bound < eps) break;
  }
  double sum = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  return ThetaValue{std::log1p(2.0 * sum), static_cast<std::int64_t>(terms.size()), bound};
}

double theta_h0(const ArakelovDivisor& d, double eps) { return theta_series(theta_parameter(d), eps).h0; }

double theta_h0_at_degree(double deg, double eps) { return theta_series(std::exp(-2.0 * deg), eps).h0; }

double gaussian_avg_quadrature(const ArakelovDivisor& d, double eps) {
  if (!(eps > 0.0)) throw DomainError("quadrature: eps must be positive");
  // Reduced coordinates: with a = e^{-2u} and jump radii n c, a (n c)^2 = t n^2.
  const double t = theta_parameter(d);
  // Piece n covers n c <= |z| < (n+1) c where [z/L] = 1 + 2n; its mass is
  // e^{-pi t n^2} - e^{-pi t (n+1)^2} = e^{-pi t n^2} (1 - e^{-pi t (2n+1)}).
  std::vector<double> pieces;
  for (std::int64_t n = 0;; ++n) {
    const double nd = static_cast<double>(n);
    const double survival = std::exp(-kPi * t * nd * nd);
    pieces.push_back((2.0 * nd + 1.0) * survival * -std::expm1(-kPi * t * (2.0 * nd + 1.0)));
    // Remaining pieces sum to (2N+1) P_N + 2 sum_{m>N} P_m with N = n + 1.
    const double big_n = nd + 1.0;
    const double p_n = std::exp(-kPi * t * big_n * big_n);
    const double p_next = std::exp(-kPi * t * (big_n + 1.0) * (big_n + 1.0));
    const double tail = (2.0 * big_n + 1.0) * p_n + 2.0 * p_next / -std::expm1(-kPi * t * (2.0 * big_n + 3.0));
    if (tail < eps * 0.5) break;
  }
  double total = 0.0;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) total += *it;
  return total;
}

MonteCarloEstimate gaussian_avg_mc(const ArakelovDivisor& d, std::uint64_t samples, std::uint64_t seed,
                                   unsigned threads) {
  if (samples == 0) throw DomainError("gaussian_avg_mc: samples must be positive");
  const double c = to_double(lattice_of(d).generator);
  const double r = arch_radius(d).value;
  // Density a exp(-pi a |z|^2), a = r^{-2}: each coordinate has variance r^2 / (2 pi).
  const double sigma = r / std::sqrt(2.0 * kPi);

  struct Partial {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;  // counts are small odd integers; no overflow for realistic runs
  };
  std::vector<Partial> partials(kSubstreams);
  auto run_block = [&](std::size_t block) {
    const std::uint64_t count = samples / kSubstreams + (block < samples % kSubstreams ? 1 : 0);
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(block + 1)));
    Partial p;
    for (std::uint64_t i = 0; i < count; ++i) {
      // Box-Muller: two independent N(0, sigma^2) coordinates.
      const double u1 = uniform_open0(rng);
      const double u2 = uniform_open0(rng);
      const double radius = std::sqrt(-2.0 * std::log(u1));
      const double x = sigma * radius * std::cos(2.0 * kPi * u2);
      const double y = sigma * radius * std::sin(2.0 * kPi * u2);
      const auto v = static_cast<std::uint64_t>(1 + 2 * static_cast<std::uint64_t>(std::floor(std::hypot(x, y) / c)));
      p.sum += v;
      p.sum_sq += v * v;
    }
    partials[block] = p;
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min<unsigned>(workers, kSubstreams);
  if (workers <= 1) {
    for (std::size_t b = 0; b < kSubstreams; ++b) run_block(b);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < kSubstreams; b += workers) run_block(b);
      });
    }
  }

  std::uint64_t sum = 0, sum_sq = 0;
  for (const auto& p : partials) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double mean = static_cast<double>(sum) / n;
  double stderr_ = 0.0;
  if (samples > 1) {
    const double var = (static_cast<double>(sum_sq) - n * mean * mean) / (n - 1.0);
    stderr_ = std::sqrt(std::max(var, 0.0) / n);
  }
  return MonteCarloEstimate{mean, stderr_, samples, seed};
}

double riemann_roch_defect(double d, double eps) {
  return theta_h0_at_degree(d, eps) - theta_h0_at_degree(-d, eps) - d;
}

}  // namespace absarith
