// Command line front end: parses expressions and problem files, runs one
// operation and prints the canonical result (or JSON with --json).

#include "dirac/boundary.hpp"
#include "dirac/format.hpp"
#include "dirac/json_io.hpp"
#include "dirac/parser.hpp"
#include "dirac/problem_file.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>

using namespace dirac;

namespace {

struct Options {
    bool json = false;
    std::string axis = "x";
    std::string expr;
    std::string from;
    std::string by;
    std::string at;
    std::string op;
    bool piecewise = false;
    int points = 11;
    std::string to;
    std::vector<std::string> files;
};

/// Failed verification: reported on stderr, distinct exit status.
struct VerificationFailed {
    std::string what;
};

Rational scalar(const std::string& text, const char* flag) {
    try {
        return as_poly(parse_expr(text)).constant_value();
    } catch (const Error& e) {
        throw Error(std::string("invalid value for ") + flag + ": " + e.what());
    }
}

Axis axis_of(const std::string& s) {
    if (s == "x") return Axis::X;
    if (s == "xi") return Axis::XI;
    throw Error("--axis must be x or xi");
}

Value normalize(const Value& v) {
    if (const auto* d = std::get_if<Dist>(&v)) return lower(BivDist::embed(*d, Axis::X));
    if (const auto* p = std::get_if<Piecewise>(&v)) return lower(BivDist::embed(Dist(*p), Axis::X));
    if (const auto* b = std::get_if<BivDist>(&v)) return lower(*b);
    return v;
}

std::string text_of(const Value& v) {
    return std::visit([](const auto& x) { return format(x); }, v);
}

void emit(const Options& o, const Value& raw) {
    Value v = normalize(raw);
    if (o.json)
        std::cout << to_json(v).dump(2) << "\n";
    else
        std::cout << text_of(v) << "\n";
}

void emit_scalar(const Options& o, const Rational& r) {
    if (o.json)
        std::cout << json{{"type", "scalar"}, {"text", r.str()}}.dump(2) << "\n";
    else
        std::cout << r.str() << "\n";
}

Value cmd_diff(const Options& o, const Value& v) {
    Axis ax = axis_of(o.axis);
    if (const auto* f = std::get_if<Poly>(&v)) return ax == Axis::X ? Value(derive(*f)) : Value(Poly());
    if (const auto* p = std::get_if<Piecewise>(&v)) {
        if (ax == Axis::XI) return Poly();
        return o.piecewise ? Value(pw_derive(*p)) : Value(dist_derive(Dist(*p)));
    }
    if (o.piecewise) throw Error("--piecewise applies to piecewise functions only");
    if (const auto* d = std::get_if<Dist>(&v)) return ax == Axis::X ? Value(dist_derive(*d)) : Value(Poly());
    return biv_derive(std::get<BivDist>(v), ax);
}

Value cmd_integrate(const Options& o, const Value& v) {
    Axis ax = axis_of(o.axis);
    std::optional<Rational> b;
    if (!o.from.empty()) b = scalar(o.from, "--from");
    BivDist phi;
    if (const auto* f = std::get_if<Poly>(&v)) {
        if (ax == Axis::X) return b ? integrate_from(*f, *b) : integrate(*f);
        phi = BivDist(BivPoly::in_x(*f));
    } else if (const auto* p = std::get_if<Piecewise>(&v)) {
        if (ax == Axis::X) return b ? pw_integrate_from(*p, *b) : pw_integrate(*p);
        phi = BivDist::embed(Dist(*p), Axis::X);
    } else if (const auto* d = std::get_if<Dist>(&v)) {
        if (ax == Axis::X) return b ? dist_integrate_from(*d, *b) : dist_integrate(*d);
        phi = BivDist::embed(*d, Axis::X);
    } else {
        phi = std::get<BivDist>(v);
    }
    BivDist I = biv_integrate(phi, ax);
    if (b) I -= biv_evaluate(I, ax, *b);
    return I;
}

Value cmd_shift(const Options& o, const Value& v) {
    Rational c = scalar(o.by, "--by");
    Axis ax = axis_of(o.axis);
    if (ax == Axis::X) {
        if (const auto* f = std::get_if<Poly>(&v)) return shift(*f, c);
        if (const auto* p = std::get_if<Piecewise>(&v)) return pw_shift(*p, c);
        if (const auto* d = std::get_if<Dist>(&v)) return dist_shift(*d, c);
    } else if (!std::holds_alternative<BivDist>(v)) {
        return v;
    }
    return biv_shift(std::get<BivDist>(v), ax, c);
}

std::optional<Rational> cmd_eval(const Options& o, const Value& v, Value& out) {
    Rational c = scalar(o.at, "--at");
    Axis ax = axis_of(o.axis);
    if (ax == Axis::X) {
        if (const auto* f = std::get_if<Poly>(&v)) return evaluate(*f, c);
        if (const auto* p = std::get_if<Piecewise>(&v)) return pw_evaluate(*p, c);
        if (const auto* d = std::get_if<Dist>(&v)) return dist_evaluate(*d, c);
    } else if (!std::holds_alternative<BivDist>(v)) {
        out = v;
        return std::nullopt;
    }
    out = biv_evaluate(std::get<BivDist>(v), ax, c);
    return std::nullopt;
}

Value cmd_op_apply(const Options& o, const Value& v) {
    IdOp A = parse_operator(o.op);
    Axis ax = axis_of(o.axis);
    if (ax == Axis::X) {
        if (const auto* f = std::get_if<Poly>(&v)) return act(A, *f);
        if (const auto* p = std::get_if<Piecewise>(&v)) return act_pw(A, *p);
        if (const auto* d = std::get_if<Dist>(&v)) return act_dist(A, *d);
    }
    BivDist phi;
    if (const auto* b = std::get_if<BivDist>(&v))
        phi = *b;
    else
        phi = BivDist::embed(Dist(as_piecewise(v)), Axis::X);
    return act_axis(A, phi, ax);
}

void cmd_sample(const Options& o, const Value& v) {
    Piecewise p = as_piecewise(v);
    if (o.points < 2) throw Error("--points must be at least 2");
    Rational a = scalar(o.from, "--from"), b = scalar(o.to, "--to");
    if (!(a < b)) throw Error("--from must be less than --to");
    int digits = 10;
    if (const char* env = std::getenv("DIRAC_SAMPLE_DIGITS")) {
        try {
            digits = std::stoi(env);
        } catch (const std::exception&) {
            throw Error("DIRAC_SAMPLE_DIGITS must be an integer");
        }
        if (digits < 0 || digits > 60) throw Error("DIRAC_SAMPLE_DIGITS must be between 0 and 60");
    }
    std::cout << "# t\tvalue\n";
    for (int i = 0; i < o.points; ++i) {
        Rational t = a + (b - a) * Rational(i, o.points - 1);
        std::cout << t.decimal(digits) << "\t" << eval_at(p, t).decimal(digits) << "\n";
    }
}

struct ProblemReport {
    std::string text;
    json data;
    bool verified = true;
    std::string failure;
};

ProblemReport analyze(const std::string& path, bool want_green, bool want_solution) {
    ProblemReport rep;
    ProblemFile pf = load_problem(path);
    BoundaryProblem bp = pf.problem();
    auto [alpha, beta] = pf.resolved_interval();
    std::ostringstream out;
    std::string iv = "[" + alpha.str() + "," + beta.str() + "]";
    rep.data["file"] = path;
    rep.data["interval"] = {alpha.str(), beta.str()};

    IdOp G = greens_operator(bp);
    rep.data["green_operator"] = to_json(G);
    rep.data["well_posed"] = bp.well_posed();
    out << "G = " << format(G) << "\n";
    if (want_green) {
        GreensFn gf = extract_greens_fn(G, alpha, beta);
        VerificationReport vr = verify_distributional(bp, gf);
        rep.data["green_function"] = to_json(gf.g);
        rep.data["verification"] = to_json(vr);
        BivDist on_interval = biv_reduce_mod(gf.g, alpha, beta);
        rep.data["green_function_on_interval"] = to_json(on_interval);
        out << "g(x,xi) = " << format(gf.g) << "\n";
        out << "g(x,xi) on " << iv << " = " << format(on_interval) << "\n";
        if (vr.operator_ok())
            out << "verified: T_x g = delta(x-xi) on " << iv << "\n";
        else
            out << "failed: T_x g - delta(x-xi) = " << format(vr.operator_residual) << " on " << iv << "\n";
        for (std::size_t j = 0; j < vr.cond_residuals.size(); ++j) {
            std::string c = format(bp.conds()[j]);
            if (vr.cond_residuals[j].is_zero())
                out << "verified: (" << c << ")_x g = 0\n";
            else
                out << "failed: (" << c << ")_x g = " << format(vr.cond_residuals[j]) << "\n";
        }
        if (!vr.ok()) {
            rep.verified = false;
            rep.failure = path + ": distributional verification failed";
        }
    }
    if (want_solution && pf.force) {
        Solution s = apply_greens(bp, *pf.force, alpha, beta);
        rep.data["solution"] = to_json(s.by_operator);
        rep.data["routes_agree"] = s.routes_agree();
        out << "u = " << format(s.by_operator) << "\n";
        if (s.routes_agree()) {
            out << "verified: operator and kernel routes agree on " << iv << "\n";
        } else {
            out << "failed: kernel route gives " << format(s.by_kernel) << "\n";
            rep.verified = false;
            rep.failure = path + ": operator and kernel routes disagree";
        }
    }
    rep.text = out.str();
    return rep;
}

int run_problems(const Options& o, bool want_green, bool want_solution, bool need_force) {
    std::vector<std::future<ProblemReport>> jobs;
    for (const auto& f : o.files) {
        if (need_force && !load_problem(f).force) throw Error(f + ": problem file has no 'force:' line");
        jobs.push_back(std::async(std::launch::async, analyze, f, want_green, want_solution));
    }
    json all = json::array();
    std::vector<std::string> failures;
    bool first = true;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        ProblemReport r;
        try {
            r = jobs[i].get();
        } catch (const std::exception& e) {
            throw Error(o.files[i] + ": " + e.what());
        }
        if (!r.verified) failures.push_back(r.failure);
        if (o.json) {
            all.push_back(r.data);
        } else {
            if (o.files.size() > 1) std::cout << (first ? "" : "\n") << "== " << o.files[i] << " ==\n";
            std::cout << r.text;
        }
        first = false;
    }
    if (o.json) std::cout << (o.files.size() == 1 ? all[0] : all).dump(2) << "\n";
    if (!failures.empty()) {
        std::string msg;
        for (const auto& f : failures) msg += (msg.empty() ? "" : "\n") + f;
        throw VerificationFailed{msg};
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of piecewise functions, Dirac distributions and Green's functions"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Print JSON instead of text");

    auto expr_cmd = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("expr", o.expr, "Expression")->required();
        c->add_option("--axis", o.axis, "Variable for bivariate input: x or xi");
        return c;
    };
    expr_cmd("simplify", "Print the canonical form");
    CLI::App* diff = expr_cmd("diff", "Distributional derivative");
    diff->add_flag("--piecewise", o.piecewise, "Derivative of a piecewise function extended by zero on the steps");
    CLI::App* integ = expr_cmd("integrate", "Antiderivative from 0, or from --from");
    integ->add_option("--from", o.from, "Base point of the antiderivative");
    expr_cmd("shift", "Substitute x+c for x")->add_option("--by", o.by, "Shift amount")->required();
    expr_cmd("eval", "Evaluation (left-continuous at jumps)")->add_option("--at", o.at, "Point")->required();
    expr_cmd("op-apply", "Apply an integro-differential operator")
        ->add_option("--op", o.op, "Operator, e.g. 'x*D + I'")
        ->required();
    CLI::App* sample = expr_cmd("sample", "Tab-separated samples of a piecewise function");
    sample->add_option("--points", o.points, "Number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--from", o.from, "Left end")->required();
    sample->add_option("--to", o.to, "Right end")->required();

    auto file_cmd = [&](const char* name, const char* help, bool many) {
        CLI::App* c = app.add_subcommand(name, help);
        auto* opt = c->add_option("file", o.files, "Problem file")->required()->check(CLI::ExistingFile);
        if (!many) opt->expected(1);
        return c;
    };
    file_cmd("solve", "Green's operator, Green's function and solution for each problem file", true);
    file_cmd("green", "Green's function and its distributional verification", false);
    file_cmd("verify", "Distributional verification report", false);
    file_cmd("apply", "Solve with the forcing term of the problem file", false);

    CLI11_PARSE(app, argc, argv);
    CLI::App* cmd = app.get_subcommands().front();
    std::string name = cmd->get_name();
    try {
        if (name == "solve") return run_problems(o, true, true, false);
        if (name == "green") return run_problems(o, true, false, false);
        if (name == "apply") return run_problems(o, false, true, true);
        if (name == "verify") {
            ProblemFile pf = load_problem(o.files[0]);
            BoundaryProblem bp = pf.problem();
            auto [alpha, beta] = pf.resolved_interval();
            VerificationReport vr = verify_distributional(bp, extract_greens_fn(greens_operator(bp), alpha, beta));
            if (o.json) {
                std::cout << to_json(vr).dump(2) << "\n";
            } else {
                std::cout << "T_x g = delta(x-xi): " << (vr.operator_ok() ? "ok" : "FAILED") << "\n";
                for (std::size_t j = 0; j < vr.cond_residuals.size(); ++j)
                    std::cout << "(" << format(bp.conds()[j]) << ")_x g = 0: "
                              << (vr.cond_residuals[j].is_zero() ? "ok" : "FAILED") << "\n";
            }
            if (!vr.ok()) throw VerificationFailed{o.files[0] + ": distributional verification failed"};
            return 0;
        }

        Value v = parse_expr(o.expr);
        if (name == "simplify") {
            emit(o, v);
        } else if (name == "diff") {
            emit(o, cmd_diff(o, v));
        } else if (name == "integrate") {
            emit(o, cmd_integrate(o, v));
        } else if (name == "shift") {
            emit(o, cmd_shift(o, v));
        } else if (name == "eval") {
            Value out;
            if (auto r = cmd_eval(o, v, out))
                emit_scalar(o, *r);
            else
                emit(o, out);
        } else if (name == "op-apply") {
            emit(o, cmd_op_apply(o, v));
        } else if (name == "sample") {
            cmd_sample(o, v);
        }
    } catch (const VerificationFailed& f) {
        std::cerr << "error: " << f.what << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
