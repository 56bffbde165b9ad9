#pragma once

// JSON encodings used by the command-line tool.
//   endomorphism  [0, 2, 1]                  images of 0..n
//   witt element  {"2": 1, "3": -1}          cyclic-basis coefficients
//   group ring    {"1/3": 2, "0": 1}         coefficients of e(a/b)
//   divisor       {"finite": {"2": 1}, "arch": {"exact_exp": "1/3"} | {"float": 0.5}}
//   homomorphism  {"domain": [2], "codomain": [4], "matrix": [[2]]}, rows are generator images
// Parse failures throw ParseError.

#include <stdexcept>
#include <string>

#include "absarith/arakelov.hpp"
#include "absarith/dold_kan.hpp"
#include "absarith/gamma_core.hpp"
#include "absarith/group_ring.hpp"
#include "absarith/types.hpp"
#include "absarith/witt.hpp"
#include "json.hpp"

namespace absarith {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

/// Parses text, rethrowing JSON syntax errors as ParseError.
Json parse_json(const std::string& text);

/// Small integers as numbers, larger ones as decimal strings.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

PointedEndo endo_from_json(const Json& j);
Json endo_to_json(const PointedEndo& t);

Json cycle_type_to_json(const CycleType& c);

WittElement witt_from_json(const Json& j);
Json witt_to_json(const WittElement& w);

GroupRingElt groupring_from_json(const Json& j);
Json groupring_to_json(const GroupRingElt& x);

ArakelovDivisor divisor_from_json(const Json& j);
Json divisor_to_json(const ArakelovDivisor& d);

GroupHom hom_from_json(const Json& j);
Json hom_to_json(const GroupHom& h);

}  // namespace absarith
