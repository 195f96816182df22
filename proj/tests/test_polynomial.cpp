#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "trichain/polynomial.hpp"

using namespace trichain;

namespace {

OrderPtr zyx() { return VariableOrder::make({"z", "y", "x"}); }

Polynomial P(const OrderPtr& o, const std::string& s) { return parse(s, o); }

}  // namespace

TEST_CASE("parse: pinned examples") {
    auto o = zyx();
    const Polynomial f1 = P(o, "x^3 - 3*x^2 + 2*x");
    CHECK(f1 == P(o, "x*(x - 1)*(x - 2)"));
    CHECK(P(o, "0").isZero());
    CHECK(P(o, "2/3*x*y + 2/3*y*x") == P(o, "4/3*x*y"));
    CHECK(P(o, "2/3*x*y + 2/3*y*x").terms().size() == 1);
}

TEST_CASE("parse: errors carry a position") {
    auto o = zyx();
    CHECK_THROWS_AS(P(o, "x^-1"), ParseError);
    CHECK_THROWS_AS(P(o, "w + 1"), ParseError);
    CHECK_THROWS_AS(P(o, "x +"), ParseError);
    CHECK_THROWS_AS(P(o, "x/2"), ParseError);
    CHECK_THROWS_AS(P(o, "(x"), ParseError);
    CHECK_THROWS_AS(P(o, "x x"), ParseError);
    try {
        P(o, "x + w");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("parse: grammar corners") {
    auto o = zyx();
    CHECK(P(o, "-x^2") == -P(o, "x^2"));
    CHECK(P(o, "(x + 1)^2") == P(o, "x^2 + 2*x + 1"));
    CHECK(P(o, "  x \t+ 1 ") == P(o, "x + 1"));
    CHECK(P(o, "7/14") == Polynomial::constant(o, Rational(1, 2)));
}

TEST_CASE("format: canonical and round-trips") {
    auto o = zyx();
    CHECK(P(o, "2*y*x^2 - x^2 - 3*y*x + x").format() == "2*y*x^2 - 3*y*x - x^2 + x");
    CHECK(P(o, "0").format() == "0");
    CHECK(P(o, "y - 1").format() == "y - 1");
    CHECK(P(o, "-1/2*x + 1/3").format() == "-1/2*x + 1/3");

    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 300; ++i) {
        const Polynomial p = oracles::randomPolynomial(rng, o, 3, 4, 8);
        CHECK(parse(p.format(), o) == p);
    }
}

TEST_CASE("add: examples and identity") {
    auto o = zyx();
    CHECK(P(o, "x + 1") + P(o, "x - 1") == P(o, "2*x"));
    const Polynomial p = P(o, "z*y - 2*x + 1/2");
    CHECK(p + Polynomial(o) == p);
    CHECK(P(o, "x^2 - 2") + P(o, "x^2 - 3") == P(o, "2*x^2 - 5"));
}

TEST_CASE("mul: examples") {
    auto o = zyx();
    CHECK(P(o, "(x - 1)*(x - 2)") * P(o, "x") == P(o, "x^3 - 3*x^2 + 2*x"));
    const Polynomial p = P(o, "y^2*x - z + 3");
    CHECK(p * Polynomial::constant(o, Rational(1)) == p);
    CHECK(P(o, "y - 1") * P(o, "y + 1") == P(o, "y^2 - 1"));
}

TEST_CASE("ring axioms on random polynomials") {
    auto o = zyx();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 150; ++i) {
        const Polynomial a = oracles::randomPolynomial(rng, o, 3, 4, 8);
        const Polynomial b = oracles::randomPolynomial(rng, o, 3, 4, 8);
        const Polynomial c = oracles::randomPolynomial(rng, o, 3, 4, 8);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + (-a)).isZero());
    }
}

TEST_CASE("mainVariable") {
    auto o = zyx();
    const auto y = *o->find("y");
    const auto z = *o->find("z");
    CHECK(*P(o, "2*y*x^2 - x^2 - 3*y*x + x").mainVariable() == y);
    CHECK(!P(o, "5").mainVariable());
    CHECK(!Polynomial(o).mainVariable());
    CHECK(*P(o, "z*x - z").mainVariable() == z);
}

TEST_CASE("initial") {
    auto o = zyx();
    CHECK(P(o, "2*y*x^2 - x^2 - 3*y*x + x").initial() == P(o, "2*x^2 - 3*x"));
    CHECK(P(o, "x^3 - 3*x^2 + 2*x").initial() == P(o, "1"));
    auto axb = VariableOrder::make({"x", "b", "a"});
    CHECK(parse("a*x - b", axb).initial() == parse("a", axb));
    CHECK_THROWS_AS(P(o, "5").initial(), std::invalid_argument);
}

TEST_CASE("degree bookkeeping and the zero sentinel") {
    auto o = zyx();
    const auto x = *o->find("x");
    CHECK(Polynomial(o).degreeIn(x) == kDegreeOfZero);
    CHECK(Polynomial(o).totalDegree() == kDegreeOfZero);
    CHECK(P(o, "5").degreeIn(x) == 0);
    CHECK(P(o, "y*x^3 + y^2").degreeIn(x) == 3);
    CHECK(P(o, "y*x^3 + y^2").totalDegree() == 4);
}

TEST_CASE("reductum and coefficient views") {
    auto o = zyx();
    const auto y = *o->find("y");
    const Polynomial f2 = P(o, "2*y*x^2 - x^2 - 3*y*x + x");
    CHECK(f2.reductum(y) == P(o, "-x^2 + x"));
    const auto coeffs = f2.coefficientsIn(y);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0] == P(o, "-x^2 + x"));
    CHECK(coeffs[1] == P(o, "2*x^2 - 3*x"));
}

TEST_CASE("evaluate") {
    auto o = zyx();
    const auto x = *o->find("x");
    const Polynomial f3 = P(o, "z*x^2 - z*x");
    CHECK(f3.evaluate({{x.pos, Rational(1)}}).isZero());
    const Polynomial p = P(o, "z*y^2 - x + 2/3");
    CHECK(p.evaluate({}) == p);
    const Polynomial f2 = P(o, "2*y*x^2 - x^2 - 3*y*x + x");
    CHECK(f2.evaluate({{x.pos, Rational(2)}}) == P(o, "2*y - 2"));
}

TEST_CASE("order mismatch is rejected") {
    auto o1 = zyx();
    auto o2 = VariableOrder::make({"x", "y"});
    CHECK_THROWS_AS(parse("x", o1) + parse("x", o2), std::invalid_argument);
    CHECK_THROWS_AS(parse("x", o1) * parse("y", o2), std::invalid_argument);
}

TEST_CASE("rational literals") {
    CHECK(Rational::fromString("-4/6") == Rational(-2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK_THROWS_AS(Rational(1L, 0L), std::invalid_argument);
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-8, 4).str() == "-2");
}

TEST_CASE("variable order validation") {
    CHECK_THROWS_AS(VariableOrder::make({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(VariableOrder::make({"2x"}), std::invalid_argument);
    CHECK_THROWS_AS(VariableOrder::make({""}), std::invalid_argument);
    auto o = VariableOrder::make({"z", "y", "x"});
    CHECK(o->find("y"));
    CHECK(!o->find("w"));
    CHECK(greaterThan(*o->find("z"), *o->find("x")));
}
