#pragma once

#include "dirac/operator.hpp"

#include <string>
#include <string_view>

namespace dirac {

// Canonical text forms. Every string produced here parses back to the same
// element (see parser.hpp).

std::string format(const Poly& f, std::string_view var = "x");
std::string format(const Piecewise& p, std::string_view var = "x");
std::string format(const Dist& phi, std::string_view var = "x");
std::string format(const BivPoly& u);
std::string format(const BivDist& phi);
std::string format(const IdOp& op);
inline std::string format(const StieltjesCond& c) { return format(c.op()); }

/// "x-2", "x+1/2", "xi-0".
std::string format_point(std::string_view var, const Rational& a);

}  // namespace dirac
