#include "hepta/poly.hpp"
#include <algorithm>

#include <ostream>
#include <sstream>

namespace hepta {

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Rational(1); }

const Rational& Poly::leading() const { return coeffs_.back(); }

Rational Poly::coefficient(std::size_t k) const {
    if (k >= coeffs_.size()) return Rational(0);
    return coeffs_[k];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Poly Poly::monic() const {
    Poly p = *this;
    const Rational lc = leading();
    if (lc == Rational(1)) return p;
    for (auto& c : p.coeffs_) c /= lc;
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = num;
    Poly quot;
    const int dd = den.degree();
    if (rem.degree() >= dd) quot.coeffs_.assign(rem.degree() - dd + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const Rational factor = rem.leading() / den.leading();
        quot.coeffs_[shift] = factor;
        for (std::size_t i = 0; i < den.coeffs_.size(); ++i) {
            rem.coeffs_[shift + i] -= factor * den.coeffs_[i];
        }
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

namespace {

// Scales to integer coefficients with content 1 and positive leading
// coefficient; the scale factor is irrelevant for gcd purposes.
Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k)
        den_lcm = lcm(den_lcm, p.coefficient(k).denominator());
    mpz_class num_gcd = 0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k) {
        const Rational& c = p.coefficient(k);
        num_gcd = gcd(num_gcd, mpz_class(c.numerator() * (den_lcm / c.denominator())));
    }
    std::vector<Rational> out(p.degree() + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k) {
        const Rational& c = p.coefficient(k);
        out[k] = Rational(mpq_class(c.numerator() * (den_lcm / c.denominator()) / num_gcd));
    }
    Poly result(std::move(out));
    if (result.leading().sign() < 0) result = -result;
    return result;
}

// Pseudo-remainder of integer-coefficient polynomials: repeatedly forms
// lc(q)*r - lc(r)*t^delta*q, which stays integral.
Poly pseudo_remainder(const Poly& p, const Poly& q) {
    Poly r = p;
    const Rational lead_q = q.leading();
    while (!r.is_zero() && r.degree() >= q.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - q.degree());
        const Rational lead_r = r.leading();
        std::vector<Rational> next(r.degree(), Rational(0));
        for (std::size_t k = 0; k + 1 <= static_cast<std::size_t>(r.degree()); ++k) {
            Rational v = lead_q * r.coefficient(k);
            if (k >= shift) v -= lead_r * q.coefficient(k - shift);
            next[k] = std::move(v);
        }
        r = Poly(std::move(next));
    }
    return r;
}

}  // namespace

// Primitive pseudo-remainder sequence: plain Euclid over Q squares the
// coefficient sizes at every step, which dominates the whole library once
// symbolic pivots appear.
Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidArgument("poly_gcd of two zero polynomials");
    Poly p = make_primitive(a);
    Poly q = make_primitive(b);
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        Poly r = make_primitive(pseudo_remainder(p, q));
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.abs();
        if (i == 0 || mag != Rational(1)) os << mag.str();
        if (i >= 1) {
            os << "t";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace hepta
