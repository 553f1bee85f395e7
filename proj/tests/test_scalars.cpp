#include <doctest.h>

#include "hepta/float_scalar.hpp"
#include "hepta/poly.hpp"
#include "hepta/prng.hpp"
#include "hepta/ratfunc.hpp"
#include "hepta/rational.hpp"

using namespace hepta;

namespace {

Poly make_poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.push_back(Rational(c));
    return Poly(std::move(v));
}

RatFunc random_ratfunc(SplitMix64& rng) {
    const auto coeff = [&rng] { return Rational(rng.range(-6, 6), rng.range(1, 4)); };
    std::vector<Rational> num(1 + rng.next() % 3);
    for (auto& c : num) c = coeff();
    std::vector<Rational> den(1 + rng.next() % 3);
    for (auto& c : den) c = coeff();
    Poly d(den);
    if (d.is_zero()) d = Poly(Rational(1));
    return RatFunc(Poly(num), d);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-629, 19899) * Rational(19899, -629) == Rational(1));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(3, -6)).denominator() == 2);
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational parsing accepts p, p/q and signs") {
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("+4/8") == Rational(1, 2));
    CHECK(Rational::parse(" 5/1 ") == Rational(5));
    CHECK(Rational::parse("3/-6") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
}

TEST_CASE("rational round-trips through str") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational r(rng.range(-500, 500), rng.range(1, 60));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("poly_gcd on the stock examples") {
    const Poly t2m1 = make_poly({-1, 0, 1});
    const Poly tm1 = make_poly({-1, 1});
    CHECK(poly_gcd(t2m1, tm1) == tm1);
    CHECK(poly_gcd(Poly::variable(), Poly(Rational(1))) == Poly(Rational(1)));
    CHECK(poly_gcd(make_poly({2, 2}), make_poly({4, 4})) == make_poly({1, 1}));
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), InvalidArgument);
}

TEST_CASE("poly_gcd divides both arguments exactly, and common divisors divide it") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        const auto rand_poly = [&rng](int max_deg) {
            std::vector<Rational> c(1 + rng.next() % (max_deg + 1));
            for (auto& x : c) x = Rational(rng.range(-4, 4));
            return Poly(std::move(c));
        };
        const Poly common = rand_poly(2);
        Poly p = rand_poly(2) * common;
        Poly q = rand_poly(2) * common;
        if (p.is_zero() && q.is_zero()) continue;
        const Poly g = poly_gcd(p, q);
        CHECK(Poly::divmod(p, g).second.is_zero());
        CHECK(Poly::divmod(q, g).second.is_zero());
        if (!common.is_zero()) CHECK(Poly::divmod(g, common).second.is_zero());
    }
}

TEST_CASE("ratfunc arithmetic canonicalizes") {
    const RatFunc t = RatFunc::symbol();
    CHECK(RatFunc(make_poly({-1, 0, 1})) / RatFunc(make_poly({-1, 1})) ==
          RatFunc(make_poly({1, 1})));
    CHECK(t * (RatFunc(1) / t) == RatFunc(1));
    CHECK((t + RatFunc(2)) - t == RatFunc(2));
    CHECK_THROWS_AS(t / RatFunc(0), DivisionByZero);
    // canonical: monic denominator
    const RatFunc f(make_poly({1}), make_poly({2, 4}));
    CHECK(f.den().leading() == Rational(1));
}

TEST_CASE("eval_at_zero") {
    CHECK(RatFunc(make_poly({7, 3})).eval_at_zero() == Rational(7));
    const RatFunc disp(make_poly({-13214, -2292}), make_poly({6607, 1146}));
    CHECK(disp.eval_at_zero() == Rational(-2));
    CHECK_THROWS_AS((RatFunc(1) / RatFunc::symbol()).eval_at_zero(), PoleAtZero);
}

TEST_CASE("ratfunc built from rationals only evaluates like rationals") {
    SplitMix64 rng(37);
    for (int i = 0; i < 100; ++i) {
        const Rational a(rng.range(-9, 9), rng.range(1, 7));
        const Rational b(rng.range(-9, 9), rng.range(1, 7));
        const Rational c(rng.range(1, 9), rng.range(1, 7));
        const RatFunc combined = (RatFunc(a) + RatFunc(b)) * RatFunc(b) / RatFunc(c);
        CHECK_FALSE(combined.mentions_symbol());
        CHECK(combined.eval_at_zero() == (a + b) * b / c);
    }
}

TEST_CASE("field axioms on random rational functions") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const RatFunc x = random_ratfunc(rng);
        const RatFunc y = random_ratfunc(rng);
        const RatFunc z = random_ratfunc(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x - x == RatFunc(0));
        if (!x.is_zero()) {
            CHECK(x * (RatFunc(1) / x) == RatFunc(1));
            CHECK(x / x == RatFunc(1));
        }
    }
}

TEST_CASE("canonical form is unique") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const RatFunc x = random_ratfunc(rng);
        // the same value assembled through a different route
        const RatFunc scaled(x.num() * make_poly({3, 5}), x.den() * make_poly({3, 5}));
        CHECK(scaled == x);
        CHECK(scaled.num() == x.num());
        CHECK(scaled.den() == x.den());
    }
}

TEST_CASE("is_zero per mode") {
    CHECK(Rational(0, 7).is_zero());
    CHECK_FALSE(RatFunc::symbol().is_zero());
    CHECK(float_is_zero(1e-15, 1.0));
    CHECK_FALSE(float_is_zero(1e-9, 1.0));
    CHECK(float_is_zero(5e-10, 1e3));  // scale-relative
    FloatOptions loose;
    loose.eps_abs = 1e-6;
    CHECK(float_is_zero(5e-7, 0.0, loose));
}
