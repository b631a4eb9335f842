#pragma once

#include "dirac/boundary.hpp"
#include "dirac/parser.hpp"

#include <nlohmann/json.hpp>

namespace dirac {

using json = nlohmann::json;

// Polynomials appear as canonical strings; points and scalars as rational
// strings ("3/2"), so that everything stays exact.

json to_json(const Poly& f, std::string_view var = "x");
json to_json(const Piecewise& p, std::string_view var = "x");
json to_json(const Dist& phi);
json to_json(const BivDist& phi);
json to_json(const IdOp& op);
json to_json(const Value& v);
json to_json(const VerificationReport& rep);

}  // namespace dirac
