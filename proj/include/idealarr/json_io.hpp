#pragma once

#include "idealarr/derivation.hpp"
#include "idealarr/ideals.hpp"
#include "idealarr/polymatrix.hpp"
#include "idealarr/rootsys.hpp"
#include "idealarr/saito.hpp"

#include <json.hpp>

namespace idealarr {

using Json = nlohmann::ordered_json;

// [{"e": [...], "c": "num/den"}, ...] in stored (graded lex, descending)
// order; exponents cover every ambient coordinate.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const QuotientPtr& q, const Json& j);

// {"coeffs": [poly, ...]}
Json to_json(const Derivation& d);
Derivation derivation_from_json(const QuotientPtr& q, const Json& j);

Json to_json(const RatMatrix& m);
Json to_json(const HessenbergFunction& h);

// {"type": .., "roots": [{"i","j","form"}...], "covers": [[lower, upper]...]}
Json roots_json(const RootSystem& rs);

// Per-ideal verification record. Timing is left out so that repeated runs
// produce identical bytes.
Json to_json(const VerificationReport& r);

}  // namespace idealarr
