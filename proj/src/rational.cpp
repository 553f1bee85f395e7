#include "hepta/rational.hpp"

#include <cctype>
#include <ostream>

namespace hepta {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

namespace {

bool scan_integer(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        ++digits;
    }
    return digits > 0 && pos > start;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view s = text.substr(begin, end - begin);
    if (s.empty()) throw ParseError("empty rational token");

    std::size_t pos = 0;
    if (!scan_integer(s, pos)) throw ParseError("invalid rational token \"" + std::string(text) + "\"");
    std::string num(s.substr(0, pos));
    std::string den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') throw ParseError("invalid rational token \"" + std::string(text) + "\"");
        ++pos;
        std::size_t den_start = pos;
        if (!scan_integer(s, pos) || pos != s.size())
            throw ParseError("invalid rational token \"" + std::string(text) + "\"");
        den = std::string(s.substr(den_start, pos - den_start));
    }
    if (num.front() == '+') num.erase(0, 1);  // mpz rejects a leading '+'
    if (den.front() == '+') den.erase(0, 1);

    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational r;
    r.q_ = mpq_class(n, d);
    r.q_.canonicalize();
    return r;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hepta
