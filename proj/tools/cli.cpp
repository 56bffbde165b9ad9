#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "absarith/arakelov.hpp"
#include "absarith/dold_kan.hpp"
#include "absarith/gamma_core.hpp"
#include "absarith/gamma_space.hpp"
#include "absarith/group_ring.hpp"
#include "absarith/json_io.hpp"
#include "absarith/witt.hpp"

namespace absarith {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Result {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::optional<std::uint64_t> seed;
  std::optional<std::string> csv;  // replaces the key/value dump in csv mode
};

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  const char* env = std::getenv("ABSARITH_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ParseError(std::string("ABSARITH_THREADS must be a nonnegative integer, got \"") + env + "\"");
  }
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string outputs_as_csv(const Json& outputs) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [key, value] : outputs.items()) os << csv_cell(key) << ',' << csv_cell(value) << '\n';
  return os.str();
}

Json real_to_json(const PositiveReal& x) {
  if (x.exact) return Json(to_string(*x.exact));
  return Json(x.value);
}

ArakelovDivisor divisor_option(const std::string& divisor, const std::optional<double>& deg, Json& inputs) {
  if (!divisor.empty()) {
    inputs["divisor"] = parse_json(divisor);
    return divisor_from_json(inputs["divisor"]);
  }
  if (deg) {
    inputs["deg"] = *deg;
    return ArakelovDivisor::at_infinity(*deg);
  }
  throw ParseError("one of --divisor or --deg is required");
}

std::string delannoy_csv(const std::vector<std::vector<Integer>>& table) {
  std::ostringstream os;
  os << "n\\k";
  for (std::size_t k = 0; k < table.front().size(); ++k) os << ',' << k;
  os << '\n';
  for (std::size_t n = 0; n < table.size(); ++n) {
    os << n;
    for (const auto& v : table[n]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical computations for Witt vectors of the sphere spectrum, theta invariants "
               "and the Gamma-space of an Arakelov divisor",
               "absarith"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format = "json";
  int threads_flag = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads_flag, "Worker threads (0: ABSARITH_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  // witt
  auto* witt = app.add_subcommand("witt", "Witt ring W0(S) in the cyclic basis");
  witt->require_subcommand(1);
  std::string endo, elt, elt_a, elt_b, gr;
  std::int64_t witt_n = 1;
  auto* w_tau = witt->add_subcommand("tau", "Class of a pointed endomorphism");
  w_tau->add_option("--endo", endo, "Images of 0..n as a JSON array")->required();
  auto* w_ghost = witt->add_subcommand("ghost", "Ghost component gh_n");
  w_ghost->add_option("--elt", elt, "Witt element {\"k\": coeff}")->required();
  w_ghost->add_option("--n", witt_n, "Index")->required();
  auto* w_mul = witt->add_subcommand("mul", "Product of two elements");
  w_mul->add_option("--a", elt_a)->required();
  w_mul->add_option("--b", elt_b)->required();
  auto* w_frob = witt->add_subcommand("frob", "Frobenius F_n");
  w_frob->add_option("--elt", elt)->required();
  w_frob->add_option("--n", witt_n)->required();
  auto* w_versch = witt->add_subcommand("versch", "Verschiebung V_n");
  w_versch->add_option("--elt", elt)->required();
  w_versch->add_option("--n", witt_n)->required();
  auto* w_basis = witt->add_subcommand("basis", "Primitive basis and group ring image, or back from --gr");
  auto* basis_elt = w_basis->add_option("--elt", elt);
  auto* basis_gr = w_basis->add_option("--gr", gr, "Invariant element of Z[Q/Z] {\"a/b\": coeff}");
  basis_elt->excludes(basis_gr);
  w_basis->require_option(1);

  // theta
  auto* theta = app.add_subcommand("theta", "Theta invariants of Arakelov divisors");
  theta->require_subcommand(1);
  std::string divisor;
  std::optional<double> deg;
  double eps = 1e-12;
  std::uint64_t samples = 1'000'000, seed = 1;
  auto add_divisor_opts = [&](CLI::App* sub) {
    auto* d = sub->add_option("--divisor", divisor, "Divisor JSON");
    auto* g = sub->add_option("--deg", deg, "Degree of a divisor supported at infinity");
    d->excludes(g);
    sub->add_option("--eps", eps, "Absolute truncation tolerance")->check(CLI::PositiveNumber);
  };
  auto* t_h0 = theta->add_subcommand("h0", "h0_theta(D)");
  add_divisor_opts(t_h0);
  auto* t_verify = theta->add_subcommand("verify", "exp h0_theta(D) against the Gaussian average of [z/L]");
  add_divisor_opts(t_verify);
  auto* t_rr = theta->add_subcommand("rr", "h0(D) - h0(-D) - deg D");
  add_divisor_opts(t_rr);
  auto* t_mc = theta->add_subcommand("mc", "Monte Carlo estimate of the Gaussian average");
  add_divisor_opts(t_mc);
  t_mc->add_option("--samples", samples)->check(CLI::PositiveNumber);
  t_mc->add_option("--seed", seed);

  // gspace
  auto* gspace = app.add_subcommand("gspace", "The Gamma-space of a divisor");
  gspace->require_subcommand(1);
  std::int64_t table_n = 0, table_k = 0;
  bool csv_flag = false;
  std::size_t k_arg = 1, n_max = 1;
  auto* g_del = gspace->add_subcommand("delannoy", "Table of gamma(n, k)");
  g_del->add_option("--n", table_n)->required()->check(CLI::Range(0, 2000));
  g_del->add_option("--k", table_k)->required()->check(CLI::Range(0, 2000));
  g_del->add_flag("--csv", csv_flag, "Same as --format csv");
  auto* g_pi = gspace->add_subcommand("pi", "Homotopy of H(D)(k+)");
  g_pi->add_option("--divisor", divisor)->required();
  g_pi->add_option("--k", k_arg)->check(CLI::Range(1, 1000));
  g_pi->add_option("--n-max", n_max, "Also certify pi_2 .. pi_{n-max} trivial")->check(CLI::Range(1, 64));

  // dk
  auto* dk = app.add_subcommand("dk", "Simplicial abelian group of a homomorphism A -> B");
  dk->require_subcommand(1);
  std::string hom;
  std::uint64_t cap = kDefaultLevelCap;
  auto* dk_check = dk->add_subcommand("check", "Homotopy groups by enumeration");
  dk_check->add_option("--hom", hom, "{\"domain\":[..],\"codomain\":[..],\"matrix\":[[..]]}")->required();
  dk_check->add_option("--n-max", n_max)->check(CLI::Range(0, 8));
  dk_check->add_option("--cap", cap, "Largest level size to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    const unsigned threads = resolve_threads(threads_flag);
    if (*w_tau) {
      r.command = "witt tau";
      r.inputs["endo"] = parse_json(endo);
      const PointedEndo t = endo_from_json(r.inputs["endo"]);
      r.outputs["tau"] = witt_to_json(tau(t));
    } else if (*w_ghost) {
      r.command = "witt ghost";
      r.inputs = {{"elt", parse_json(elt)}, {"n", witt_n}};
      r.outputs["ghost"] = integer_to_json(ghost(witt_from_json(r.inputs["elt"]), witt_n));
    } else if (*w_mul) {
      r.command = "witt mul";
      r.inputs = {{"a", parse_json(elt_a)}, {"b", parse_json(elt_b)}};
      r.outputs["product"] = witt_to_json(witt_from_json(r.inputs["a"]) * witt_from_json(r.inputs["b"]));
    } else if (*w_frob || *w_versch) {
      const bool frob = w_frob->parsed();
      r.command = frob ? "witt frob" : "witt versch";
      r.inputs = {{"elt", parse_json(elt)}, {"n", witt_n}};
      const WittElement w = witt_from_json(r.inputs["elt"]);
      r.outputs["result"] = witt_to_json(frob ? frobenius(witt_n, w) : verschiebung(witt_n, w));
    } else if (*w_basis) {
      r.command = "witt basis";
      WittElement w;
      if (!gr.empty()) {
        r.inputs["gr"] = parse_json(gr);
        w = groupring_to_witt(groupring_from_json(r.inputs["gr"]));
        r.outputs["witt"] = witt_to_json(w);
      } else {
        r.inputs["elt"] = parse_json(elt);
        w = witt_from_json(r.inputs["elt"]);
      }
      Json prim = Json::object();
      for (const auto& [n, c] : to_primitive_basis(w)) prim[std::to_string(n)] = integer_to_json(c);
      r.outputs["primitive"] = prim;
      r.outputs["group_ring"] = groupring_to_json(witt_to_groupring(w));
    } else if (*t_h0) {
      r.command = "theta h0";
      const ArakelovDivisor d = divisor_option(divisor, deg, r.inputs);
      r.inputs["eps"] = eps;
      r.outputs["degree"] = degree(d);
      r.outputs["exp_degree"] = real_to_json(exp_degree(d));
      r.outputs["h0"] = theta_h0(d, eps);
    } else if (*t_verify) {
      r.command = "theta verify";
      const ArakelovDivisor d = divisor_option(divisor, deg, r.inputs);
      r.inputs["eps"] = eps;
      const double h0 = theta_h0(d, eps);
      const double integral = gaussian_avg_quadrature(d, eps);
      r.outputs["h0"] = h0;
      r.outputs["exp_h0"] = std::exp(h0);
      r.outputs["integral"] = integral;
      r.outputs["difference"] = std::abs(std::exp(h0) - integral);
    } else if (*t_rr) {
      r.command = "theta rr";
      const ArakelovDivisor d = divisor_option(divisor, deg, r.inputs);
      r.inputs["eps"] = eps;
      const double dd = degree(d);
      r.outputs["degree"] = dd;
      r.outputs["h0"] = theta_h0_at_degree(dd, eps);
      r.outputs["h0_dual"] = theta_h0_at_degree(-dd, eps);
      r.outputs["defect"] = riemann_roch_defect(dd, eps);
    } else if (*t_mc) {
      r.command = "theta mc";
      const ArakelovDivisor d = divisor_option(divisor, deg, r.inputs);
      r.inputs["eps"] = eps;
      r.inputs["samples"] = samples;
      r.inputs["seed"] = seed;
      const MonteCarloEstimate mc = gaussian_avg_mc(d, samples, seed, threads);
      const double target = std::exp(theta_h0(d, eps));
      r.seed = seed;
      r.outputs["mean"] = mc.mean;
      r.outputs["stderr"] = mc.stderr_;
      r.outputs["samples"] = mc.samples;
      r.outputs["exp_h0"] = target;
      r.outputs["z_score"] = mc.stderr_ > 0 ? (mc.mean - target) / mc.stderr_ : 0.0;
    } else if (*g_del) {
      r.command = "gspace delannoy";
      r.inputs = {{"n", table_n}, {"k", table_k}};
      const auto table = delannoy_table(table_n, table_k);
      Json rows = Json::array();
      for (const auto& row : table) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(integer_to_json(v));
        rows.push_back(jr);
      }
      r.outputs["table"] = rows;
      r.csv = delannoy_csv(table);
      if (csv_flag) format = "csv";
    } else if (*g_pi) {
      r.command = "gspace pi";
      r.inputs = {{"divisor", parse_json(divisor)}, {"k", k_arg}, {"n_max", n_max}};
      const ArakelovDivisor d = divisor_from_json(r.inputs["divisor"]);
      r.outputs["exp_degree"] = real_to_json(exp_degree(d));
      const bool trivial = pi0_trivial_predicate(d, k_arg);
      if (k_arg == 1) {
        const Pi0Cardinality p = pi0_cardinality_k1(d);
        r.outputs["pi0"] = p.trivial ? Json("trivial") : integer_to_json(p.cardinality);
      } else {
        r.outputs["pi0"] = trivial ? "trivial" : "nontrivial";
      }
      r.outputs["pi0_trivial"] = trivial;
      r.outputs["pi1_count"] = integer_to_json(pi1_count(d, k_arg));
      if (n_max >= 2) {
        GSConfig cfg;
        if (d.is_exact()) {
          cfg = gs_config(d);
        } else {
          const GSConfigF f = gs_config_float(d);
          cfg = GSConfig{Rational(f.c), Rational(f.lambda)};
        }
        Json higher = Json::array();
        for (std::size_t n = 2; n <= n_max; ++n) {
          const HigherPiRecord rec = higher_pi_trivial(n, cfg, k_arg);
          Json faces = Json::array();
          for (std::size_t j : rec.faces_used) faces.push_back("d" + std::to_string(j));
          higher.push_back({{"n", n},
                            {"trivial", rec.trivial},
                            {"faces_used", faces},
                            {"samples_checked", rec.samples_checked}});
        }
        r.outputs["pi_higher_trivial"] = higher;
      }
    } else if (*dk_check) {
      r.command = "dk check";
      r.inputs = {{"hom", parse_json(hom)}, {"n_max", n_max}};
      const GroupHom h = hom_from_json(r.inputs["hom"]);
      Json orders = Json::object();
      for (const HomotopyGroup& g : homotopy_groups(h, n_max, cap)) {
        const std::string key = "pi" + std::to_string(g.n);
        Json inv = Json::array();
        for (const auto& d : g.invariants) inv.push_back(integer_to_json(d));
        r.outputs[key] = inv;
        orders[key] = g.order;
      }
      r.outputs["orders"] = orders;
    }
  } catch (const ParseError& e) {
    err << "absarith: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "absarith: domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CapExceeded& e) {
    err << "absarith: resource cap: " << e.what() << '\n';
    return kExitCap;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (format == "csv") {
    out << (r.csv ? *r.csv : outputs_as_csv(r.outputs));
    return kExitOk;
  }
  Json doc = {{"command", r.command}, {"inputs", r.inputs}, {"outputs", r.outputs}};
  if (r.seed) doc["seed"] = *r.seed;
  doc["elapsed_ms"] = elapsed_ms;
  doc["version"] = kVersion;
  out << doc.dump() << '\n';
  return kExitOk;
}

}  // namespace absarith
