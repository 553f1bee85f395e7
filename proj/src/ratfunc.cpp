#include "hepta/ratfunc.hpp"

#include <ostream>

namespace hepta {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

RatFunc RatFunc::symbol() { return RatFunc(Poly::variable()); }

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (num_.degree() > 0 || den_.degree() > 0) {
        const Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
    }
    if (!den_.is_one()) {
        const Rational lc = den_.leading();
        num_ = Poly::divmod(num_, Poly(lc)).first;
        den_ = Poly::divmod(den_, Poly(lc)).first;
    }
}

Rational RatFunc::as_rational() const {
    if (!is_constant()) throw InvalidArgument("rational function is not constant: " + str());
    return num_.constant_term();
}

Rational RatFunc::eval_at_zero() const {
    const Rational d0 = den_.constant_term();
    if (d0.is_zero()) throw PoleAtZero("pole at t = 0 in " + str());
    return num_.constant_term() / d0;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() && b.is_constant())
        return RatFunc(a.num_.constant_term() + b.num_.constant_term());
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    if (a.is_constant() && b.is_constant())
        return RatFunc(a.num_.constant_term() - b.num_.constant_term());
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_constant() && b.is_constant())
        return RatFunc(a.num_.constant_term() * b.num_.constant_term());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    if (a.is_zero()) return RatFunc();
    if (a.is_constant() && b.is_constant())
        return RatFunc(a.num_.constant_term() / b.num_.constant_term());
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace hepta
