#pragma once

#include "dirac/operator.hpp"

#include <string_view>
#include <variant>

namespace dirac {

/// A parsed expression, lowered to the smallest structure that holds it.
using Value = std::variant<Poly, Piecewise, Dist, BivDist>;

/// Expressions over x and xi with H(...) and delta(...), delta'(...),
/// delta^{k}(...). Arguments are x-a, a-x, xi-a, a-xi, x-xi or xi-x, with
/// the point always written out (x-0, not x). Throws ParseError on syntax
/// errors and ForbiddenProduct on undefined products.
BivDist parse_bivariate(std::string_view src);
Value parse_expr(std::string_view src);
Value lower(const BivDist& phi);

/// Operators built from D, I, ev(a) and polynomial coefficients with *
/// (composition), +, - and ^, e.g. "ev(1)*D + 2*I*x".
IdOp parse_operator(std::string_view src);

/// The piecewise element an expression denotes; throws DomainError for
/// expressions with Dirac terms or xi.
Piecewise as_piecewise(const Value& v);
Poly as_poly(const Value& v);

}  // namespace dirac
