#ifndef HEPTA_RATFUNC_HPP_
#define HEPTA_RATFUNC_HPP_

#include <iosfwd>
#include <string>

#include "hepta/poly.hpp"

namespace hepta {

// Element of the rational-function field Q(t), kept canonical:
// gcd(num, den) = 1 and den is monic. A value built purely from
// Rationals never grows a t, so its denominator stays 1.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(long value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT
    RatFunc(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);  // throws DivisionByZero when den is zero

    static RatFunc symbol();  // the field element t

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }
    bool mentions_symbol() const { return num_.degree() > 0 || den_.degree() > 0; }

    // pre: is_constant()
    Rational as_rational() const;

    // num(0)/den(0); throws PoleAtZero when den(0) = 0.
    Rational eval_at_zero() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace hepta

#endif  // HEPTA_RATFUNC_HPP_
