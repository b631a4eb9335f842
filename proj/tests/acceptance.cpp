// One pass/fail line per acceptance criterion. Exits nonzero when any fails.

#include "dirac/boundary.hpp"
#include "dirac/format.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "support/rows.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace dirac;
using dirac::testkit::Gen;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
[[maybe_unused]] Rational R(const Rational& c) { return c; }
const Poly X = Poly::x();

/// Counts checks and keeps the first failure for the report line.
struct Tally {
    int checks = 0;
    int failures = 0;
    std::string first;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what();
    }
    void check(bool ok, const std::string& what) {
        check(ok, [&] { return what; });
    }
    /// Guards a block that may throw; an exception counts as one failure.
    void run(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }
};

Piecewise H(const Rational& a, const Poly& f = Poly(1)) { return Piecewise::step(a, f); }
Dist delta(const Rational& a, int k = 0) { return Dist::dirac(a, k); }
BivDist Hxi(const Rational& b) {
    BivDist r;
    r.add_pw2(BivPoly(R(1)), std::nullopt, b);
    return r;
}

StieltjesCond C(const IdOp& op) { return StieltjesCond(op); }
BoundaryProblem dirichlet() {
    return BoundaryProblem(IdOp::D(2), {C(IdOp::ev(R(0))), C(IdOp::ev(R(1)))}, {Poly(1), X});
}

Tally ground_algebra() {
    Tally t;
    Gen g(101);
    for (int i = 0; i < 200; ++i) {
        Poly f = g.poly(4), h = g.poly(4);
        Rational c = g.rational(), s = g.rational();
        Poly If = integrate(f), Ih = integrate(h);
        t.check(If * Ih == integrate(f * Ih) + integrate(h * If), "weak Rota-Baxter");
        t.check(f * Ih == integrate(f * h) + integrate(derive(f) * Ih), "strong Rota-Baxter");
        t.check(derive(If) == f, "section");
        t.check(f - integrate(derive(f)) == Poly(evaluate(f, R(0))), "induced evaluation");
        t.check(shift(If, c) - integrate(shift(f, c)) == Poly(evaluate(If, c)), "shift commutator");
        Rational Hs = heaviside(s).as_rational(), Hbar = co_heaviside(s).as_rational();
        Rational from_s = definite_integral(f, s, R(0));
        t.check(integrate_from(f, pos_part(s)) == If + Poly(Hs * from_s), "integral from s+");
        t.check(integrate_from(f, neg_part(s)) == If + Poly(Hbar * from_s), "integral from s-");
        t.check(definite_integral(f, pos_part(s), R(0)) == Hs * from_s, "definite integral from s+");
        t.check(definite_integral(f, neg_part(s), R(0)) == Hbar * from_s, "definite integral from s-");
    }
    return t;
}

Tally piecewise_suite() {
    Tally t;
    Gen g(102);
    for (int i = 0; i < 200; ++i) {
        Piecewise p = g.piecewise(), q = g.piecewise();
        Piecewise Ip = pw_integrate(p), Iq = pw_integrate(q);
        t.check(Ip * Iq == pw_integrate(p * Iq) + pw_integrate(q * Ip), [&] { return "weak RB on " + format(p); });
        Rational a = g.rational(), b = g.rational();
        t.check(H(join(a, b)) + H(meet(a, b)) == H(a) + H(b), "exchange law");
        Piecewise fa = H(g.point(), g.poly(3));
        Piecewise If = pw_integrate(fa);
        t.check((If * If - R(2) * pw_integrate(fa * If)).is_zero(), [&] { return "polarization on " + format(fa); });
    }
    Piecewise a = H(R(1), X), b = H(R(2), X);
    t.check(pw_pseudo_eval(a * b) == R(4) * H(R(2)), "pseudo-evaluation of the product");
    t.check(pw_pseudo_eval(a) * pw_pseudo_eval(b) == R(2) * H(R(2)), "product of pseudo-evaluations");
    return t;
}

Tally distribution_suite() {
    Tally t;
    Gen g(103);
    auto pseudo_eval = [](const Dist& phi) { return phi - dist_integrate(dist_derive(phi)); };
    for (int i = 0; i < 200; ++i) {
        Poly f = g.poly(3), h = g.poly(3);
        Rational a = g.point(), c = g.rational();
        int k = g.integer(0, 5);
        t.check(reduce_product(f * h, a, k) == module_scalar_mul(f, reduce_product(h, a, k)), "confluence");
        std::map<int, Rational> orders;
        Dist reduced = reduce_product(f, a, k);
        for (const auto& [key, coef] : reduced.diracs()) orders[key.second] = coef;
        t.check(orders == oracle::iterated_leibniz(f.coeffs(), a, k), "reduction against iterated Leibniz");
        Dist phi = g.dist();
        Dist Iphi = dist_integrate(phi);
        t.check(module_scalar_mul(integrate(f), Iphi) ==
                    dist_integrate(module_scalar_mul(f, Iphi)) + dist_integrate(module_scalar_mul(integrate(f), phi)),
                "module Rota-Baxter");
        t.check(dist_derive(Iphi) == phi, "section");
        t.check(module_scalar_mul(f, delta(a)) == Dist::dirac(a, 0, evaluate(f, a)), "sifting");
        t.check(pseudo_eval(module_scalar_mul(f, phi)) == evaluate(f, R(0)) * pseudo_eval(phi),
                "pseudo-evaluation multiplicativity");
        t.check(dist_shift(Iphi, c) - dist_integrate(dist_shift(phi, c)) == Dist(dist_evaluate(Iphi, c)),
                "shift commutator");
        t.check(dist_shift(dist_derive(phi), c) == dist_derive(dist_shift(phi, c)), "shift and derivative");
        t.check(dist_shift(module_scalar_mul(f, phi), c) == module_scalar_mul(shift(f, c), dist_shift(phi, c)),
                "shift is a module map");
    }
    return t;
}

Tally bivariate_suite() {
    Tally t;
    Gen g(104);
    using O = Gen::BivOptions;
    O plain;
    plain.diag_diracs = plain.tensorial = false;
    O uni = plain;
    uni.diagonal = false;
    O diag = plain;
    diag.heaviside = false;
    O ground;
    ground.ground_tensorial = true;
    BivDist Hd = BivDist::diag_heaviside();

    auto rota_baxter = [&](const BivDist& a, const BivDist& b, Axis ax, const char* pair) {
        BivDist Ia = biv_integrate(a, ax), Ib = biv_integrate(b, ax);
        t.check(biv_mul(Ia, Ib) == biv_integrate(biv_mul(a, Ib), ax) + biv_integrate(biv_mul(b, Ia), ax),
                [&] { return std::string("Rota-Baxter ") + pair + " on " + format(a) + " | " + format(b); });
    };
    for (int i = 0; i < 100; ++i) {
        BivDist u1 = g.biv(uni), u2 = g.biv(uni), d1 = g.biv(diag), d2 = g.biv(diag);
        if (d1.is_zero()) d1 = Hd;
        if (d2.is_zero()) d2 = biv_mul(Hd, Hxi(g.point()));
        for (Axis ax : {Axis::X, Axis::XI}) {
            rota_baxter(u1, u2, ax, "univariate/univariate");
            rota_baxter(d1, u1, ax, "diagonal/univariate");
            rota_baxter(d1, d2, ax, "diagonal/diagonal");
        }
        BivDist phi = g.biv(ground);
        t.check(biv_integrate(phi, Axis::XI) == exchange(biv_integrate(exchange(phi), Axis::X)),
                [&] { return "exchange conjugation on " + format(phi); });
        t.check(biv_derive(biv_integrate(phi, Axis::X), Axis::X) == phi, "section in x");
        t.check(biv_derive(biv_integrate(phi, Axis::XI), Axis::XI) == phi, "section in xi");
        Rational a = g.point();
        int k = g.integer(0, 3);
        t.check(biv_evaluate(Hd, Axis::XI, a) == BivDist::embed(Dist(H(a)), Axis::X), "evaluation of H(x-xi) in xi");
        t.check(biv_evaluate(Hd, Axis::X, a) == BivDist(R(1)) - Hxi(a), "evaluation of H(x-xi) in x");
        t.check(biv_evaluate(BivDist::diag_dirac(k), Axis::X, a).is_zero(), "evaluation of diagonal Diracs");
    }
    // the diagonal relation against the pointwise truth table
    int sampled = 0;
    while (sampled < 100) {
        std::vector<RawTerm> raw;
        for (int j = g.integer(1, 3); j > 0; --j) raw.push_back(RawTerm{g.bivpoly(), g.step(), g.step(), g.coin()});
        BivDist n = diagonal_normalize(raw);
        Rational x0 = g.rational(3, 7), xi0 = g.rational(3, 7);
        bool on_jump = x0 == xi0;
        for (const auto& r : raw) {
            if (r.x_step) on_jump = on_jump || *r.x_step == x0 || *r.x_step == xi0;
            if (r.xi_step) on_jump = on_jump || *r.xi_step == xi0 || *r.xi_step == x0;
        }
        if (on_jump) continue;
        Rational expected;
        for (const auto& r : raw) expected += oracle::value(r, x0, xi0);
        t.check(eval2(n, x0, xi0) == expected, "truth table");
        ++sampled;
    }
    return t;
}

Tally extraction_fidelity() {
    Tally t;
    Gen g(105);
    for (int row = 1; row <= 4; ++row)
        for (int i = 0; i < 100; ++i) {
            auto r = testkit::random_row(g, row);
            t.run(r.label, [&] {
                GreensFn gf = extract_greens_fn(r.op, r.alpha, r.beta);
                t.check(gf.g == r.kernel, [&] { return r.label + " kernel " + format(gf.g); });
                t.check(testkit::kernel_apply(gf.g, r.force, r.alpha, r.beta) == testkit::operator_apply(r),
                        r.label + " routes");
            });
        }
    return t;
}

Tally dirichlet_end_to_end() {
    Tally t;
    t.run("dirichlet", [&] {
        BoundaryProblem bp = dirichlet();
        IdOp G = greens_operator(bp);
        t.check(bp.op() * G == IdOp::identity(), "T G = 1");
        for (const auto& b : bp.conds()) t.check((b.op() * G).is_zero(), "boundary annihilation");
        GreensFn gf = extract_greens_fn(G, R(0), R(1));
        t.check(!gf.g.has_diracs(), "Dirac-free kernel");
        VerificationReport rep = verify_distributional(bp, gf);
        t.check(rep.operator_ok(), "T_x g = delta(x-xi)");
        t.check(rep.conds_ok(), "beta_x g = 0");
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                Rational x0(i, 6), xi0(2 * j - 1, 10);
                t.check(eval2(gf.g, x0, xi0) == oracle::dirichlet_kernel(x0, xi0), "pointwise kernel");
            }
    });
    return t;
}

Tally piecewise_forcing() {
    Tally t;
    t.run("dirichlet forcing", [&] {
        BoundaryProblem bp = dirichlet();
        Piecewise f = H(R(1, 2));
        Solution s = apply_greens(bp, f, R(0), R(1));
        t.check(s.routes_agree(), "operator and kernel routes agree");
        const Piecewise& u = s.by_operator;
        t.check(pw_derive(pw_derive(u)) == f, "u'' = f away from the jump");
        t.check(eval_at(u, R(0)).is_zero() && eval_at(u, R(1)).is_zero(), "u(0) = u(1) = 0");
    });
    BoundaryProblem ill(IdOp::D(2),
                        {C(IdOp::ev(R(0))), C(IdOp::ev(R(1)) * IdOp::D() + IdOp::ev(R(1)) * IdOp::D(2))},
                        {Poly(1), X});
    bool raised = false;
    try {
        apply_greens(ill, H(R(1, 2)), R(0), R(1));
    } catch (const IllPosedError&) {
        raised = true;
    }
    t.check(raised, "ill-posed problem with piecewise forcing raises IllPosedError");
    return t;
}

Tally ill_posed_detection() {
    Tally t;
    t.run("ill-posed", [&] {
        BoundaryProblem ill(IdOp::D(2),
                            {C(IdOp::ev(R(0))), C(IdOp::ev(R(1)) * IdOp::D() + IdOp::ev(R(1)) * IdOp::D(2))},
                            {Poly(1), X});
        GreensFn gf = extract_greens_fn(greens_operator(ill), R(0), R(1));
        bool point_dirac = false;
        for (const auto& [key, p] : gf.g.tensorial_xi()) point_dirac = point_dirac || key == BivDist::DiracKey{R(1), 0};
        t.check(point_dirac, [&] { return "no delta(xi-1) term in " + format(gf.g); });
    });
    BoundaryProblem neumann(IdOp::D(2), {C(IdOp::ev(R(0)) * IdOp::D()), C(IdOp::ev(R(1)) * IdOp::D())},
                            {Poly(1), X});
    bool singular = false;
    try {
        check_regular(neumann);
    } catch (const SingularError& e) {
        singular = e.rank() == 1;
    }
    t.check(singular, "Neumann problem not rejected with a rank-1 evaluation matrix");
    return t;
}

Tally uniqueness() {
    Tally t;
    BivDist d = BivDist::diag_dirac(0);
    t.check(check_uniqueness(d, R(0), R(1)).unique, "delta(x-xi) rejected");
    BivDist point = d;
    point.add_txi(R(1, 2), 0, BivPoly::x(), Piecewise(1));
    for (const BivDist& k : {R(2) * d, point, d + BivDist::diag_dirac(1)})
        t.check(!check_uniqueness(k, R(0), R(1)).unique, [&] { return format(k) + " accepted"; });
    return t;
}

Tally numeric_cross_validation() {
    Tally t;
    Gen g(110);
    for (int i = 0; i < 50; ++i) {
        Piecewise p = g.piecewise(3, 3);
        Piecewise Ip = pw_integrate(p);
        auto jumps = p.jump_points();
        std::vector<Rational> cuts(jumps.begin(), jumps.end());
        cuts.push_back(R(0));
        for (int j = 0; j < 20; ++j) {
            Rational x = g.rational(3, 7);
            double q = oracle::midpoint_quadrature([&](const Rational& s) { return eval_at(p, s); }, R(0), x, cuts);
            double sym = eval_at(Ip, x).to_double();
            t.check(std::abs(sym - q) <= 1e-6, [&] {
                return "integral of " + format(p) + " at " + x.str() + ": " + std::to_string(sym) + " vs " +
                       std::to_string(q);
            });
        }
    }
    return t;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Tally (*run)();
    };
    const Criterion criteria[] = {
        {"ground algebra axioms", ground_algebra},
        {"piecewise extension", piecewise_suite},
        {"distribution module", distribution_suite},
        {"bivariate distributions", bivariate_suite},
        {"kernel extraction rows", extraction_fidelity},
        {"Dirichlet problem end to end", dirichlet_end_to_end},
        {"piecewise forcing", piecewise_forcing},
        {"ill-posed and singular problems", ill_posed_detection},
        {"uniqueness procedure", uniqueness},
        {"numeric cross-validation", numeric_cross_validation},
    };
    int failed = 0;
    int n = 0;
    for (const auto& c : criteria) {
        ++n;
        Tally t;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            t.check(false, std::string("uncaught: ") + e.what());
        }
        bool ok = t.failures == 0;
        failed += ok ? 0 : 1;
        std::printf("criterion %d: %s  %s (%d checks", n, ok ? "PASS" : "FAIL", c.name, t.checks);
        if (!ok) std::printf(", %d failed; first: %s", t.failures, t.first.c_str());
        std::printf(")\n");
    }
    return failed == 0 ? 0 : 1;
}
