#include "dirac/format.hpp"
#include "dirac/json_io.hpp"
#include "dirac/parser.hpp"
#include "dirac/problem_file.hpp"
#include "support/gen.hpp"

#include <gtest/gtest.h>

using namespace dirac;
using dirac::testkit::Gen;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
[[maybe_unused]] Rational R(const Rational& c) { return c; }
const Poly X = Poly::x();

Dist as_dist(const Value& v) {
    return std::visit(
        [](const auto& e) -> Dist {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, BivDist>)
                return to_univariate(e, Axis::X);
            else
                return Dist(e);
        },
        v);
}

BivDist as_biv(const Value& v) {
    return std::visit(
        [](const auto& e) -> BivDist {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, BivDist>)
                return e;
            else
                return BivDist::embed(Dist(e), Axis::X);
        },
        v);
}

TEST(RoundTrip, Polynomials) {
    Gen g(1);
    for (int i = 0; i < 500; ++i) {
        Poly f = g.poly(5);
        EXPECT_EQ(as_poly(parse_expr(format(f))), f) << format(f);
    }
}

TEST(RoundTrip, Piecewise) {
    Gen g(2);
    for (int i = 0; i < 500; ++i) {
        Piecewise p = g.piecewise(4, 3);
        EXPECT_EQ(as_piecewise(parse_expr(format(p))), p) << format(p);
    }
}

TEST(RoundTrip, Distributions) {
    Gen g(3);
    for (int i = 0; i < 500; ++i) {
        Dist d = g.dist(4);
        EXPECT_EQ(as_dist(parse_expr(format(d))), d) << format(d);
    }
}

TEST(RoundTrip, Bivariate) {
    Gen g(4);
    for (int i = 0; i < 500; ++i) {
        BivDist phi = g.biv();
        EXPECT_EQ(parse_bivariate(format(phi)), phi) << format(phi);
        EXPECT_EQ(as_biv(parse_expr(format(phi))), phi) << format(phi);
    }
}

TEST(RoundTrip, Operators) {
    Gen g(5);
    for (int i = 0; i < 500; ++i) {
        IdOp op = g.op();
        EXPECT_EQ(parse_operator(format(op)), op) << format(op);
    }
}

TEST(Parser, Lowering) {
    Value v = parse_expr("x^2 + 3/2");
    ASSERT_TRUE(std::holds_alternative<Poly>(v));
    EXPECT_EQ(std::get<Poly>(v), X * X + Poly(R(3, 2)));
    Value h = parse_expr("H(x-1)*H(x-2)");
    ASSERT_TRUE(std::holds_alternative<Piecewise>(h));
    EXPECT_EQ(std::get<Piecewise>(h), Piecewise::step(R(2)));
    Value d = parse_expr("x*delta'(x-0)");
    ASSERT_TRUE(std::holds_alternative<Dist>(d));
    EXPECT_EQ(std::get<Dist>(d), Dist::dirac(R(0), 0, R(-1)));
    EXPECT_TRUE(std::holds_alternative<BivDist>(parse_expr("H(x-xi)")));
    EXPECT_EQ(as_piecewise(parse_expr("H(1-x)")), Piecewise::co_step(R(1)));
    EXPECT_EQ(as_dist(parse_expr("delta^{2}(x-1)")), Dist::dirac(R(1), 2));
}

TEST(Parser, Errors) {
    EXPECT_THROW(parse_expr("delta(x-0)*delta(x-0)"), ForbiddenProduct);
    EXPECT_THROW(parse_expr("delta(x-xi)*delta(x-xi)"), ForbiddenProduct);
    EXPECT_THROW(parse_expr("H(x)"), ParseError);
    EXPECT_THROW(parse_expr(""), ParseError);
    EXPECT_THROW(as_piecewise(parse_expr("delta(x-1)")), DomainError);
    EXPECT_THROW(as_poly(parse_expr("H(x-1)")), DomainError);
    try {
        parse_expr("x + * 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_operator("D + q"), ParseError);
}

TEST(Parser, Operators) {
    EXPECT_EQ(parse_operator("D^2"), IdOp::D(2));
    EXPECT_EQ(parse_operator("ev(1)*D + 2*I*x"),
              IdOp::ev(R(1)) * IdOp::D() + R(2) * IdOp::I() * IdOp::mul(X));
    EXPECT_EQ(parse_operator("D*x"), IdOp::mul(X) * IdOp::D() + IdOp::identity());
}

TEST(ProblemFile, Parse) {
    ProblemFile pf = parse_problem(
        "# comment\n"
        "T: D^2\n"
        "cond: ev(0)\n"
        "cond: ev(1)\n"
        "fundamental: 1, x\n"
        "force: H(x-1/2)\n");
    EXPECT_EQ(pf.T, IdOp::D(2));
    ASSERT_EQ(pf.conds.size(), 2u);
    EXPECT_EQ(pf.conds[1].op(), IdOp::ev(R(1)));
    EXPECT_EQ(pf.fundamental, (std::vector<Poly>{Poly(1), X}));
    EXPECT_FALSE(pf.interval);
    EXPECT_EQ(pf.resolved_interval(), std::make_pair(R(0), R(1)));
    EXPECT_EQ(*pf.force, Piecewise::step(R(1, 2)));
    EXPECT_NO_THROW(pf.problem());
}

TEST(ProblemFile, Errors) {
    // the count mismatch is caught when the problem is built
    EXPECT_THROW(parse_problem("T: D^2\ncond: ev(0)\n").problem(), DomainError);
    EXPECT_THROW(parse_problem("cond: ev(0)\n"), DomainError);
    EXPECT_THROW(parse_problem("T: D^2\nbogus: 1\n"), DomainError);
    EXPECT_THROW(parse_problem("T D^2\n"), ParseError);
    EXPECT_THROW(parse_problem("T: D^\n"), ParseError);
    EXPECT_THROW(parse_problem("T: D\ncond: ev(0)\nfundamental: 1\ninterval: 1, 0\n"), Error);
    EXPECT_THROW(load_problem("/nonexistent/file.bp"), Error);
}

TEST(Json, Structure) {
    json p = to_json(Piecewise(X) + Piecewise::step(R(1, 2), Poly(2)));
    EXPECT_EQ(p["type"], "piecewise");
    EXPECT_EQ(p["base"], "x");
    EXPECT_EQ(p["steps"][0]["at"], "1/2");
    EXPECT_EQ(p["steps"][0]["coef"], "2");
    json d = to_json(Dist::dirac(R(-1), 2, R(3)));
    EXPECT_EQ(d["type"], "distribution");
    EXPECT_EQ(d["diracs"][0]["at"], "-1");
    EXPECT_EQ(d["diracs"][0]["order"], 2);
    json b = to_json(BivDist::diag_heaviside());
    EXPECT_EQ(b["type"], "bivariate");
    EXPECT_EQ(b["diagonal"]["heaviside"].size(), 1u);
    json o = to_json(IdOp::ev(R(1)) * IdOp::D());
    EXPECT_EQ(o["type"], "operator");
    EXPECT_EQ(o["eval_diff"][0]["at"], "1");
    EXPECT_EQ(to_json(parse_expr("x+1"))["type"], "polynomial");
}

}  // namespace
