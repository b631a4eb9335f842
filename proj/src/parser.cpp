#include "dirac/parser.hpp"

#include "dirac/error.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace dirac {

namespace {

enum class Tok { Num, Ident, Prime, Caret, LBrace, RBrace, LParen, RParen, Plus, Minus, Star, Slash, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Num, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '\'': k = Tok::Prime; break;
            case '^': k = Tok::Caret; break;
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

/// Linear argument of H or delta.
struct Linear {
    Rational cx, cxi, c;
    bool has_constant = false;
};

class Cursor {
public:
    explicit Cursor(std::string_view src) : toks_(tokenize(src)) {}

    const Token& peek() const { return toks_[i_]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_ident(std::string_view name) const { return at(Tok::Ident) && peek().text == name; }
    Token next() { return toks_[i_ == toks_.size() - 1 ? i_ : i_++]; }
    bool accept(Tok k) {
        if (!at(k)) return false;
        ++i_;
        return true;
    }
    Token expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        return next();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::string got = at(Tok::End) ? "end of input" : "'" + peek().text + "'";
        throw ParseError(msg + ", found " + got, peek().pos);
    }
    void finish() {
        if (!at(Tok::End)) fail("unexpected trailing input");
    }

    int integer() {
        Token t = expect(Tok::Num, "an integer");
        if (t.text.size() > 9) throw ParseError("integer too large", t.pos);
        return std::stoi(t.text);
    }

    /// NUM or NUM/NUM.
    Rational unsigned_rational() {
        Token t = expect(Tok::Num, "a number");
        Rational r = Rational::parse(t.text);
        if (accept(Tok::Slash)) {
            Token d = expect(Tok::Num, "a denominator");
            Rational den = Rational::parse(d.text);
            if (den.is_zero()) throw ParseError("division by zero", d.pos);
            r = r / den;
        }
        return r;
    }

    Rational signed_rational() {
        bool neg = false;
        while (at(Tok::Plus) || at(Tok::Minus)) neg ^= next().kind == Tok::Minus;
        Rational r = unsigned_rational();
        return neg ? -r : r;
    }

    Linear linear() {
        Linear l;
        bool first = true;
        while (true) {
            bool neg = false;
            if (at(Tok::Plus) || at(Tok::Minus))
                neg = next().kind == Tok::Minus;
            else if (!first)
                break;
            first = false;
            Rational sign = neg ? Rational(-1) : Rational(1);
            if (at_ident("x")) {
                next();
                l.cx += sign;
            } else if (at_ident("xi")) {
                next();
                l.cxi += sign;
            } else if (at(Tok::Num)) {
                l.c += sign * unsigned_rational();
                l.has_constant = true;
            } else {
                fail("expected x, xi or a number in the argument");
            }
        }
        return l;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

BivDist step_x(const Rational& a) {
    BivDist r;
    r.add_pw2(BivPoly(Rational(1)), a, std::nullopt);
    return r;
}

BivDist step_xi(const Rational& a) {
    BivDist r;
    r.add_pw2(BivPoly(Rational(1)), std::nullopt, a);
    return r;
}

std::optional<Rational> constant_of(const BivDist& v) {
    if (v.is_zero()) return Rational(0);
    if (v.has_diracs() || v.has_diagonal() || v.pw2().size() != 1) return std::nullopt;
    const auto& [key, u] = *v.pw2().begin();
    if (key.first || key.second || u.depends_on_x() || u.depends_on_xi()) return std::nullopt;
    return u.terms().begin()->second;
}

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : cur_(src) {}

    BivDist run() {
        BivDist v = expr();
        cur_.finish();
        return v;
    }

private:
    BivDist expr() {
        BivDist v = term();
        while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
            bool minus = cur_.next().kind == Tok::Minus;
            BivDist t = term();
            v += minus ? -t : t;
        }
        return v;
    }

    BivDist term() {
        BivDist v = unary();
        while (cur_.at(Tok::Star) || cur_.at(Tok::Slash)) {
            Token op = cur_.next();
            BivDist rhs = unary();
            if (op.kind == Tok::Star) {
                v = multiply(v, rhs, op.pos);
            } else {
                auto c = constant_of(rhs);
                if (!c) throw ParseError("division by a non-constant", op.pos);
                if (c->is_zero()) throw ParseError("division by zero", op.pos);
                v *= Rational(1) / *c;
            }
        }
        return v;
    }

    BivDist unary() {
        if (cur_.accept(Tok::Minus)) return -unary();
        if (cur_.accept(Tok::Plus)) return unary();
        return power();
    }

    BivDist power() {
        std::size_t pos = cur_.peek().pos;
        BivDist base = atom();
        if (!cur_.accept(Tok::Caret)) return base;
        int k = cur_.integer();
        BivDist r(Rational(1));
        for (int i = 0; i < k; ++i) r = multiply(r, base, pos);
        return r;
    }

    static BivDist multiply(const BivDist& a, const BivDist& b, std::size_t pos) {
        try {
            return biv_mul(a, b);
        } catch (const ForbiddenProduct& e) {
            throw ForbiddenProduct(std::string(e.what()) + " at position " + std::to_string(pos));
        }
    }

    BivDist atom() {
        const Token& t = cur_.peek();
        if (t.kind == Tok::Num) return BivDist(cur_.unsigned_rational());
        if (cur_.accept(Tok::LParen)) {
            BivDist v = expr();
            cur_.expect(Tok::RParen, "')'");
            return v;
        }
        if (t.kind != Tok::Ident) cur_.fail("expected an expression");
        std::string name = t.text;
        std::size_t pos = t.pos;
        cur_.next();
        if (name == "x") return BivDist(BivPoly::x());
        if (name == "xi") return BivDist(BivPoly::xi());
        if (name == "H") return heaviside(argument(pos));
        if (name == "delta") {
            int k = 0;
            if (cur_.at(Tok::Prime)) {
                while (cur_.accept(Tok::Prime)) ++k;
            } else if (cur_.accept(Tok::Caret)) {
                if (cur_.accept(Tok::LBrace)) {
                    k = cur_.integer();
                    cur_.expect(Tok::RBrace, "'}'");
                } else {
                    k = cur_.integer();
                }
            }
            return dirac(argument(pos), k);
        }
        throw ParseError("unknown name '" + name + "'", pos);
    }

    Linear argument(std::size_t pos) {
        cur_.expect(Tok::LParen, "'('");
        Linear l = cur_.linear();
        cur_.expect(Tok::RParen, "')'");
        auto one = [](const Rational& r) { return r == Rational(1) || r == Rational(-1); };
        bool diagonal = one(l.cx) && l.cxi == -l.cx && !l.has_constant;
        bool single = (one(l.cx) && l.cxi.is_zero()) || (one(l.cxi) && l.cx.is_zero());
        if (!diagonal && !single)
            throw ParseError("argument must be x-a, a-x, xi-a, a-xi, x-xi or xi-x", pos);
        if (single && !l.has_constant) throw ParseError("argument needs an explicit point, e.g. x-0", pos);
        return l;
    }

    /// H(s v - s a) with s = +-1.
    static BivDist heaviside(const Linear& l) {
        bool diagonal = !l.cx.is_zero() && !l.cxi.is_zero();
        BivDist one(Rational(1));
        if (diagonal) return l.cx.sign() > 0 ? BivDist::diag_heaviside() : one - BivDist::diag_heaviside();
        bool on_x = !l.cx.is_zero();
        Rational s = on_x ? l.cx : l.cxi;
        Rational a = -l.c / s;
        BivDist h = on_x ? step_x(a) : step_xi(a);
        return s.sign() > 0 ? h : one - h;
    }

    static BivDist dirac(const Linear& l, int k) {
        bool diagonal = !l.cx.is_zero() && !l.cxi.is_zero();
        Rational s = diagonal ? l.cx : (!l.cx.is_zero() ? l.cx : l.cxi);
        // delta^{(k)}(-t) = (-1)^k delta^{(k)}(t)
        Rational sign = (s.sign() < 0 && k % 2 == 1) ? Rational(-1) : Rational(1);
        BivDist r;
        if (diagonal) {
            r.add_diag_dirac(k, std::nullopt, BivPoly(sign));
        } else if (!l.cx.is_zero()) {
            r.add_tx(-l.c / s, k, BivPoly(sign), Piecewise(1));
        } else {
            r.add_txi(-l.c / s, k, BivPoly(sign), Piecewise(1));
        }
        return r;
    }

    Cursor cur_;
};

class OpParser {
public:
    explicit OpParser(std::string_view src) : cur_(src) {}

    IdOp run() {
        IdOp v = expr();
        cur_.finish();
        return v;
    }

private:
    IdOp expr() {
        IdOp v = term();
        while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
            bool minus = cur_.next().kind == Tok::Minus;
            IdOp t = term();
            v += minus ? -t : t;
        }
        return v;
    }

    IdOp term() {
        IdOp v = unary();
        while (cur_.at(Tok::Star) || cur_.at(Tok::Slash)) {
            Token op = cur_.next();
            IdOp rhs = unary();
            if (op.kind == Tok::Star) {
                v = op_compose(v, rhs);
                continue;
            }
            const auto& d = rhs.diff_part();
            bool constant = rhs.is_differential() && d.size() == 1 && d.begin()->first == 0 &&
                            d.begin()->second.is_constant();
            if (!constant) throw ParseError("division by a non-constant", op.pos);
            v *= Rational(1) / d.begin()->second.constant_value();
        }
        return v;
    }

    IdOp unary() {
        if (cur_.accept(Tok::Minus)) return -unary();
        if (cur_.accept(Tok::Plus)) return unary();
        IdOp base = atom();
        if (!cur_.accept(Tok::Caret)) return base;
        return op_power(base, cur_.integer());
    }

    IdOp atom() {
        const Token& t = cur_.peek();
        if (t.kind == Tok::Num) return IdOp::mul(Poly(cur_.unsigned_rational()));
        if (cur_.accept(Tok::LParen)) {
            IdOp v = expr();
            cur_.expect(Tok::RParen, "')'");
            return v;
        }
        if (t.kind != Tok::Ident) cur_.fail("expected an operator");
        std::string name = t.text;
        std::size_t pos = t.pos;
        cur_.next();
        if (name == "x") return IdOp::mul(Poly::x());
        if (name == "D") return IdOp::D();
        if (name == "I") return IdOp::I();
        if (name == "ev") {
            cur_.expect(Tok::LParen, "'('");
            Rational a = cur_.signed_rational();
            cur_.expect(Tok::RParen, "')'");
            return IdOp::ev(a);
        }
        throw ParseError("unknown operator '" + name + "'", pos);
    }

    Cursor cur_;
};

}  // namespace

BivDist parse_bivariate(std::string_view src) { return ExprParser(src).run(); }

Value lower(const BivDist& phi) {
    if (!phi.free_of(Axis::XI)) return phi;
    Dist d = to_univariate(phi, Axis::X);
    if (d.has_diracs()) return d;
    if (!d.pw().is_ground()) return d.pw();
    return d.pw().base();
}

Value parse_expr(std::string_view src) { return lower(parse_bivariate(src)); }

IdOp parse_operator(std::string_view src) { return OpParser(src).run(); }

Piecewise as_piecewise(const Value& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return Piecewise(*p);
    if (const auto* p = std::get_if<Piecewise>(&v)) return *p;
    if (std::holds_alternative<Dist>(v)) throw DomainError("expected a piecewise function, got Dirac terms");
    throw DomainError("expected a function of x alone");
}

Poly as_poly(const Value& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return *p;
    throw DomainError("expected a polynomial in x");
}

}  // namespace dirac
