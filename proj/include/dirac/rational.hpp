#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dirac {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    long to_long() const;

    std::string str() const;
    std::string decimal(int digits) const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

Rational binomial(int n, int k);
Rational power(const Rational& base, int exp);
Rational abs(const Rational& a);

Rational meet(const Rational& a, const Rational& b);
Rational join(const Rational& a, const Rational& b);
Rational pos_part(const Rational& a);
Rational neg_part(const Rational& a);

/// Value of the scalar Heaviside operator. The left-continuous convention is
/// fixed: H(0) = 0, so only 0 and 1 can ever be stored.
class HeavisideValue {
public:
    static constexpr bool left_continuous = true;

    int value() const { return v_; }
    Rational as_rational() const { return Rational(v_); }
    friend bool operator==(HeavisideValue, HeavisideValue) = default;
    friend HeavisideValue operator*(HeavisideValue a, HeavisideValue b) { return HeavisideValue(a.v_ * b.v_); }

private:
    friend HeavisideValue heaviside(const Rational&);
    friend HeavisideValue co_heaviside(const Rational&);
    explicit HeavisideValue(int v) : v_(v) {}
    int v_ = 0;
};

HeavisideValue heaviside(const Rational& a);
HeavisideValue co_heaviside(const Rational& a);

}  // namespace dirac
