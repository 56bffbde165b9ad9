#include "absarith/json_io.hpp"

#include <charconv>
#include <limits>

namespace absarith {

namespace {

std::int64_t parse_key(const std::string& key) {
  std::int64_t value = 0;
  const auto* end = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("expected an integer key, got \"" + key + "\"");
  return value;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return Json(z.convert_to<std::int64_t>());
  }
  return Json(z.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return Integer(s);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + s + "\"");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

PointedEndo endo_from_json(const Json& j) {
  expect(j.is_array() && !j.empty(), "endomorphism must be a nonempty array of images");
  std::vector<std::size_t> images;
  for (const auto& v : j) {
    expect(v.is_number_integer() && v.get<std::int64_t>() >= 0, "endomorphism images must be nonnegative integers");
    images.push_back(v.get<std::size_t>());
  }
  return PointedEndo(std::move(images));
}

Json endo_to_json(const PointedEndo& t) {
  Json out = Json::array();
  for (std::size_t x : t.images()) out.push_back(x);
  return out;
}

Json cycle_type_to_json(const CycleType& c) {
  Json out = Json::object();
  for (const auto& [len, count] : c) out[std::to_string(len)] = count;
  return out;
}

WittElement witt_from_json(const Json& j) {
  expect(j.is_object(), "Witt element must be an object {\"k\": coefficient}");
  WittElement::Coeffs coeffs;
  for (const auto& [key, value] : j.items()) {
    const std::int64_t k = parse_key(key);
    if (k <= 0) throw DomainError("cyclic order must be positive, got " + key);
    coeffs[k] += integer_from_json(value);
  }
  return WittElement(std::move(coeffs));
}

Json witt_to_json(const WittElement& w) {
  Json out = Json::object();
  for (const auto& [k, c] : w.coeffs()) out[std::to_string(k)] = integer_to_json(c);
  return out;
}

GroupRingElt groupring_from_json(const Json& j) {
  expect(j.is_object(), "group ring element must be an object {\"a/b\": coefficient}");
  GroupRingElt::Terms terms;
  for (const auto& [key, value] : j.items()) terms[parse_fraction(key)] += integer_from_json(value);
  return GroupRingElt(std::move(terms));
}

Json groupring_to_json(const GroupRingElt& x) {
  Json out = Json::object();
  for (const auto& [g, c] : x.terms()) out[to_string(g)] = integer_to_json(c);
  return out;
}

ArakelovDivisor divisor_from_json(const Json& j) {
  expect(j.is_object(), "divisor must be an object with \"finite\" and \"arch\"");
  ArakelovDivisor::FinitePart finite;
  if (j.contains("finite")) {
    expect(j["finite"].is_object(), "\"finite\" must be an object {\"p\": a_p}");
    for (const auto& [key, value] : j["finite"].items()) {
      expect(value.is_number_integer(), "finite coefficients must be integers");
      finite[parse_key(key)] = value.get<std::int64_t>();
    }
  }
  ScaleValue arch = ExactExp{Rational(1)};
  if (j.contains("arch")) {
    const Json& a = j["arch"];
    expect(a.is_object() && a.size() == 1, "\"arch\" must be {\"exact_exp\": \"p/q\"} or {\"float\": u}");
    if (a.contains("exact_exp")) {
      const Json& r = a["exact_exp"];
      if (r.is_string()) {
        try {
          arch = ExactExp{parse_rational(r.get<std::string>())};
        } catch (const DomainError&) {
          throw;
        } catch (const std::exception& e) {
          throw ParseError(std::string("bad exact_exp: ") + e.what());
        }
      } else {
        expect(r.is_number_integer(), "exact_exp must be a rational string or an integer");
        arch = ExactExp{Rational(r.get<std::int64_t>())};
      }
    } else if (a.contains("float")) {
      expect(a["float"].is_number(), "\"float\" must be a number");
      arch = FloatScale{a["float"].get<double>()};
    } else {
      throw ParseError("\"arch\" must be {\"exact_exp\": \"p/q\"} or {\"float\": u}");
    }
  }
  return ArakelovDivisor(std::move(finite), arch);
}

Json divisor_to_json(const ArakelovDivisor& d) {
  Json finite = Json::object();
  for (const auto& [p, a] : d.finite_part()) finite[std::to_string(p)] = a;
  Json arch = Json::object();
  if (const auto* e = std::get_if<ExactExp>(&d.arch_part())) {
    arch["exact_exp"] = to_string(e->r);
  } else {
    arch["float"] = std::get<FloatScale>(d.arch_part()).u;
  }
  return Json{{"finite", finite}, {"arch", arch}};
}

namespace {

std::vector<std::int64_t> orders_from_json(const Json& j, const char* name) {
  expect(j.is_array(), std::string("\"") + name + "\" must be an array of cyclic orders");
  std::vector<std::int64_t> orders;
  for (const auto& v : j) {
    expect(v.is_number_integer(), std::string("\"") + name + "\" entries must be integers");
    orders.push_back(v.get<std::int64_t>());
  }
  return orders;
}

}  // namespace

GroupHom hom_from_json(const Json& j) {
  expect(j.is_object() && j.contains("domain") && j.contains("codomain") && j.contains("matrix"),
         "homomorphism must have \"domain\", \"codomain\" and \"matrix\"");
  FiniteAbelianGroup domain(orders_from_json(j["domain"], "domain"));
  FiniteAbelianGroup codomain(orders_from_json(j["codomain"], "codomain"));
  const Json& m = j["matrix"];
  expect(m.is_array(), "\"matrix\" must be an array of rows");
  std::vector<FiniteAbelianGroup::Element> images;
  for (const auto& row : m) {
    expect(row.is_array(), "matrix rows must be arrays");
    FiniteAbelianGroup::Element image;
    for (const auto& v : row) {
      expect(v.is_number_integer(), "matrix entries must be integers");
      image.push_back(v.get<std::int64_t>());
    }
    images.push_back(std::move(image));
  }
  return GroupHom(std::move(domain), std::move(codomain), std::move(images));
}

Json hom_to_json(const GroupHom& h) {
  Json m = Json::array();
  for (const auto& row : h.images()) m.push_back(row);
  return Json{{"domain", h.domain().orders()}, {"codomain", h.codomain().orders()}, {"matrix", m}};
}

}  // namespace absarith
