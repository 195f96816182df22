#include "trichain/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace trichain {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    canon();
}

Rational::Rational(Integer n, Integer d) {
    if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(std::move(n)) / mpq_class(std::move(d));
    canon();
}

Rational Rational::fromString(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(text), 1));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
        mpq_class q(num);
        q /= mpq_class(den);
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: malformed literal '" + text + "'");
    }
}

Rational Rational::inverse() const {
    if (isZero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.isZero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::pow(unsigned e) const {
    mpq_class r(1);
    mpq_class base = v_;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return Rational(std::move(r));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace trichain
