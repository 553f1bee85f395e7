#ifndef HEPTA_RATIONAL_HPP_
#define HEPTA_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hepta/errors.hpp"

namespace hepta {

// Exact fraction of unbounded integers, always kept in canonical form:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "p/q" and plain decimal integers, with optional sign.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    double to_double() const { return q_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws DivisionByZero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational abs() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hepta

#endif  // HEPTA_RATIONAL_HPP_
