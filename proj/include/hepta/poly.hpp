#ifndef HEPTA_POLY_HPP_
#define HEPTA_POLY_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hepta/rational.hpp"

namespace hepta {

// Dense univariate polynomial over Rational in the symbol t.
// coefficient(k) is the coefficient of t^k; the zero polynomial has an
// empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit by design
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();  // the polynomial t

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const Rational& leading() const;  // pre: nonzero
    Rational coefficient(std::size_t k) const;

    Rational eval(const Rational& x) const;
    Rational constant_term() const { return coefficient(0); }

    Poly monic() const;  // pre: nonzero

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Quotient and remainder; throws DivisionByZero when divisor is zero.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic greatest common divisor; pre: not both zero.
Poly poly_gcd(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hepta

#endif  // HEPTA_POLY_HPP_
