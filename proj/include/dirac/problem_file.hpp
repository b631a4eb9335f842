#pragma once

#include "dirac/boundary.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace dirac {

/// Contents of a problem file:
///
///   T: D^2
///   cond: ev(0)
///   cond: ev(1)
///   fundamental: 1, x
///   interval: 0, 1
///   force: H(x-1/2)
///
/// Lines starting with '#' are comments. `interval` defaults to the smallest
/// interval containing 0 and every evaluation point; `force` is optional.
struct ProblemFile {
    IdOp T;
    std::vector<StieltjesCond> conds;
    std::vector<Poly> fundamental;
    std::optional<std::pair<Rational, Rational>> interval;
    std::optional<Piecewise> force;

    BoundaryProblem problem() const { return BoundaryProblem(T, conds, fundamental); }
    std::pair<Rational, Rational> resolved_interval() const;
};

/// Throws ParseError (with the line number in the message) or DomainError.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

}  // namespace dirac
