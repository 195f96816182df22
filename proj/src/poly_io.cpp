#include <cctype>
#include <sstream>
#include <stdexcept>

#include "trichain/polynomial.hpp"

namespace trichain {

namespace {

class Parser {
public:
    Parser(const std::string& text, const OrderPtr& order) : text_(text), order_(order) {}

    Polynomial run() {
        Polynomial p = parseExpr();
        skipWs();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skipWs();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Polynomial parseExpr() {
        Polynomial acc = parseTerm();
        for (;;) {
            if (accept('+')) {
                acc = acc + parseTerm();
            } else if (accept('-')) {
                acc = acc - parseTerm();
            } else {
                return acc;
            }
        }
    }

    Polynomial parseTerm() {
        Polynomial acc = parseFactor();
        while (accept('*')) acc = acc * parseFactor();
        return acc;
    }

    Polynomial parseFactor() {
        if (accept('-')) return -parseFactor();
        Polynomial base = parsePrimary();
        if (accept('^')) {
            skipWs();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a non-negative integer");
            unsigned long e = parseNatural();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    unsigned long parseNatural() {
        skipWs();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        const std::string digits = text_.substr(start, pos_ - start);
        try {
            return std::stoul(digits);
        } catch (const std::out_of_range&) {
            fail("integer literal too large for an exponent");
        }
    }

    Polynomial parsePrimary() {
        skipWs();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parseExpr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parseVariable();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parseNumber() {
        Integer num = parseBigNatural();
        if (peek('/')) {
            ++pos_;
            skipWs();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected denominator");
            Integer den = parseBigNatural();
            if (sgn(den) == 0) fail("zero denominator");
            return Polynomial::constant(order_, Rational(std::move(num), std::move(den)));
        }
        return Polynomial::constant(order_, Rational(std::move(num), Integer(1)));
    }

    Integer parseBigNatural() {
        skipWs();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    Polynomial parseVariable() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        const auto v = order_->find(name);
        if (!v) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return Polynomial::variable(order_, *v);
    }

    const std::string& text_;
    const OrderPtr& order_;
    std::size_t pos_ = 0;
};

void appendMonomial(std::ostringstream& os, const Monomial& m, const VariableOrder& order,
                    bool leadingStar) {
    bool first = !leadingStar;
    for (std::uint32_t pos = 0; pos < m.exps.size(); ++pos) {
        const auto e = m.exps[pos];
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << order.symbol(Variable{pos});
        if (e >= 2) os << '^' << e;
    }
}

}  // namespace

Polynomial parse(const std::string& text, const OrderPtr& order) {
    return Parser(text, order).run();
}

std::string Polynomial::format() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff.isNegative();
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const Rational a = t.coeff.abs();
        if (t.mono.isConstant()) {
            os << a.str();
        } else if (a.isOne()) {
            appendMonomial(os, t.mono, *order_, false);
        } else {
            os << a.str();
            appendMonomial(os, t.mono, *order_, true);
        }
    }
    return os.str();
}

}  // namespace trichain
