#ifndef TRICHAIN_RATIONAL_HPP
#define TRICHAIN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace trichain {

using Integer = mpz_class;

/// Exact rational number. Always stored reduced with a positive
/// denominator; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(Integer n, Integer d);
    explicit Rational(mpq_class q) : v_(std::move(q)) { canon(); }

    /// Parses "a" or "a/b" with optional leading '-'. Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational fromString(const std::string& text);

    bool isZero() const { return sgn(v_) == 0; }
    bool isOne() const { return v_ == 1; }
    bool isNegative() const { return sgn(v_) < 0; }
    bool isInteger() const { return v_.get_den() == 1; }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return isNegative() ? -*this : *this; }
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned e) const;

    /// Canonical text: "n" for integers, "n/d" otherwise.
    std::string str() const;

private:
    void canon() { v_.canonicalize(); }
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace trichain

#endif
