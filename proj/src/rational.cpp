#include "dirac/rational.hpp"

#include "dirac/error.hpp"

#include <cctype>

namespace dirac {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
        throw ParseError("malformed rational '" + s + "'", 0);
    mpz_class zn(n), zd(d);
    if (zd == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    mpq_class q(zn, zd);
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw DomainError("rational " + str() + " is not a machine integer");
    return q_.get_num().get_si();
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class scaled = abs(q_) * scale;
    // round half away from zero
    mpz_class n = scaled.get_num(), d = scaled.get_den();
    mpz_class r = (2 * n + d) / (2 * d);
    std::string body = r.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    bool zero = r == 0;
    return (sgn(q_) < 0 && !zero ? "-" : "") + body;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

Rational power(const Rational& base, int exp) {
    Rational r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational meet(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational join(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational pos_part(const Rational& a) { return join(a, Rational(0)); }
Rational neg_part(const Rational& a) { return meet(a, Rational(0)); }

HeavisideValue heaviside(const Rational& a) { return HeavisideValue(a.sign() > 0 ? 1 : 0); }
HeavisideValue co_heaviside(const Rational& a) { return HeavisideValue(a.sign() > 0 ? 0 : 1); }

}  // namespace dirac
