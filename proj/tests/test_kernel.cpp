#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "trichain/kernel.hpp"

using namespace trichain;

namespace {

OrderPtr zyx() { return VariableOrder::make({"z", "y", "x"}); }

Polynomial P(const OrderPtr& o, const std::string& s) { return parse(s, o); }

RegularChain chainOf(const OrderPtr& o, std::initializer_list<const char*> bottomFirst) {
    std::vector<Polynomial> ms;
    for (const char* s : bottomFirst) ms.push_back(parse(s, o));
    return RegularChain::fromMembers(o, std::move(ms));
}

KernelContext serialCtx() { return KernelContext{SolveConfig{}, nullptr}; }

std::multiset<std::string> chainSet(const std::vector<RegularChain>& cs) {
    std::multiset<std::string> out;
    for (const auto& c : cs) out.insert(c.format());
    return out;
}

}  // namespace

TEST_CASE("intersect: the worked three-way split") {
    auto o = zyx();
    const auto T = chainOf(o, {"x^3 - 3*x^2 + 2*x"});
    const auto chains = intersectAll(P(o, "2*y*x^2 - x^2 - 3*y*x + x"), T, serialCtx());
    CHECK(chainSet(chains) ==
          std::multiset<std::string>{"{x}", "{y; x - 1}", "{y - 1; x - 2}"});
    for (const auto& c : chains) CHECK(validateChain(c).ok);
}

TEST_CASE("intersect: zero and constant inputs") {
    auto o = zyx();
    const auto T = chainOf(o, {"x^3 - 3*x^2 + 2*x"});
    const auto viaZero = intersectAll(Polynomial(o), T, serialCtx());
    REQUIRE(viaZero.size() == 1);
    CHECK(viaZero[0] == T);  // passed through untouched, not refined

    CHECK(intersectAll(P(o, "7"), T, serialCtx()).empty());
}

TEST_CASE("intersect: reduction against a zero-dimensional chain") {
    auto o = zyx();
    const auto T3 = chainOf(o, {"x - 2", "y - 1"});
    const auto chains = intersectAll(P(o, "z*x^2 - z*x"), T3, serialCtx());
    CHECK(chainSet(chains) == std::multiset<std::string>{"{z; y - 1; x - 2}"});
}

TEST_CASE("intersect: every streamed chain is valid and nulls the input") {
    auto o = zyx();
    struct Case {
        const char* p;
        RegularChain T;
    };
    const std::vector<Case> cases = {
        {"2*y*x^2 - x^2 - 3*y*x + x", chainOf(o, {"x^3 - 3*x^2 + 2*x"})},
        {"z*x^2 - z*x", chainOf(o, {"x^2 - 3*x + 2", "3*y*x - 4*y - 2*x + 2"})},
        {"y^4 - 1", chainOf(o, {"x - 1"})},
        {"(y^5 + 1)*z - x", chainOf(o, {"x - 1", "y^2 + 1"})},
    };
    for (const auto& c : cases) {
        const Polynomial p = P(o, c.p);
        for (const auto& chain : intersectAll(p, c.T, serialCtx())) {
            CHECK(validateChain(chain).ok);
            CHECK(pseudoRemainderByChain(p, chain).isZero());
        }
    }
}

TEST_CASE("intersect: zero-dimensional point semantics") {
    auto o = VariableOrder::make({"y", "x"});
    // W(T) has four rational points; p vanishes at exactly two of them
    const auto T = chainOf(o, {"x^2 - 3*x + 2", "y^2 - x^2"});
    const Polynomial p = parse("y - x", o);
    const auto allPts = *enumerateChainPoints(T);
    std::vector<Point> expected;
    for (const auto& pt : allPts) {
        std::map<std::uint32_t, Rational> bind;
        for (std::uint32_t i = 0; i < pt.size(); ++i) bind.emplace(i, pt[i]);
        if (p.evaluate(bind).isZero()) expected.push_back(pt);
    }
    std::vector<Point> got;
    for (const auto& c : intersectAll(p, T, serialCtx())) {
        auto pts = enumerateChainPoints(c);
        REQUIRE(pts);
        got.insert(got.end(), pts->begin(), pts->end());
    }
    CHECK(oracles::samePointSet(got, expected));
    CHECK(expected.size() == 2);
}

TEST_CASE("regularize: gcd splits the modulus") {
    auto o = zyx();
    const auto branches =
        regularizeAll(P(o, "x - 1"), chainOf(o, {"x^3 - 3*x^2 + 2*x"}), serialCtx());
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].status == RegStatus::Zero);
    CHECK(branches[0].chain.format() == "{x - 1}");
    CHECK(branches[1].status == RegStatus::Regular);
    CHECK(branches[1].chain.format() == "{x^2 - 2*x}");
}

TEST_CASE("regularize: the zero-divisor pair splits apart") {
    auto o = zyx();
    const auto branches =
        regularizeAll(P(o, "x^2 - 3"), chainOf(o, {"(x^2 - 2)*(x^2 - 3)"}), serialCtx());
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].status == RegStatus::Zero);
    CHECK(branches[0].chain.format() == "{x^2 - 3}");
    CHECK(branches[1].status == RegStatus::Regular);
    CHECK(branches[1].chain.format() == "{x^2 - 2}");
}

TEST_CASE("regularize: constants and zero") {
    auto o = zyx();
    const auto T = chainOf(o, {"x^2 - 2"});
    auto constant = regularizeAll(P(o, "5"), T, serialCtx());
    REQUIRE(constant.size() == 1);
    CHECK(constant[0].status == RegStatus::Regular);
    CHECK(constant[0].chain == T);

    auto zero = regularizeAll(Polynomial(o), T, serialCtx());
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].status == RegStatus::Zero);
}

TEST_CASE("regularize: branch contracts hold") {
    auto o = zyx();
    struct Case {
        const char* h;
        RegularChain T;
    };
    const std::vector<Case> cases = {
        {"x - 1", chainOf(o, {"x^3 - 3*x^2 + 2*x"})},
        {"y + 1", chainOf(o, {"x - 1", "y^4 - 1"})},
        {"y - x", chainOf(o, {"x^2 - 3*x + 2", "y^2 - x^2"})},
        {"2*x - 3", chainOf(o, {"x^3 - 3*x^2 + 2*x"})},
    };
    for (const auto& c : cases) {
        const Polynomial h = P(o, c.h);
        for (const auto& br : regularizeAll(h, c.T, serialCtx())) {
            CHECK(validateChain(br.chain).ok);
            if (br.status == RegStatus::Zero) {
                CHECK(pseudoRemainderByChain(h, br.chain).isZero());
            } else {
                CHECK(!iteratedResultant(h, br.chain).isZero());
            }
        }
    }
}

TEST_CASE("regularize: zero-dimensional partition of W(T)") {
    auto o = VariableOrder::make({"y", "x"});
    const auto T = chainOf(o, {"x^2 - 3*x + 2", "y^2 - x^2"});
    const Polynomial h = parse("y - 1", o);
    const auto branches = regularizeAll(h, T, serialCtx());
    const auto points = *enumerateChainPoints(T);
    for (const auto& pt : points) {
        std::map<std::uint32_t, Rational> bind;
        for (std::uint32_t i = 0; i < pt.size(); ++i) bind.emplace(i, pt[i]);
        int appearances = 0;
        for (const auto& br : branches) {
            auto bpts = enumerateChainPoints(br.chain);
            REQUIRE(bpts);
            bool inBranch = false;
            for (const auto& bp : *bpts) inBranch = inBranch || bp == pt;
            if (!inBranch) continue;
            ++appearances;
            CHECK((br.status == RegStatus::Zero) == h.evaluate(bind).isZero());
        }
        CHECK(appearances == 1);
    }
}

TEST_CASE("regularGCD: pinned examples") {
    auto o = zyx();
    const auto y = *o->find("y");

    auto single = regularGCDAll(P(o, "(y - 1)*(y - 2)"), P(o, "(y - 1)*(y - 3)"), y,
                                chainOf(o, {"x - 1"}), serialCtx());
    REQUIRE(single.size() == 1);
    CHECK(single[0].gcd == P(o, "y - 1"));
    CHECK(single[0].chain.format() == "{x - 1}");

    const Polynomial p = P(o, "y^2 - x");
    auto assoc = regularGCDAll(p, p, y, chainOf(o, {"x^2 - 2"}), serialCtx());
    REQUIRE(assoc.size() == 1);
    CHECK(assoc[0].gcd == canonical(p));

    auto split = regularGCDAll(P(o, "y - x"), P(o, "y - 1"), y, chainOf(o, {"x^2 - x"}),
                               serialCtx());
    REQUIRE(split.size() == 2);
    std::multiset<std::string> got;
    for (const auto& b : split)
        got.insert(b.chain.format() + " g=" + b.gcd.format());
    CHECK(got == std::multiset<std::string>{"{x - 1} g=y - 1", "{x} g=1"});
}

TEST_CASE("regularGCD: gcd branch invariants") {
    auto o = zyx();
    const auto y = *o->find("y");
    const Polynomial p = P(o, "(y - 1)*(y - x)");
    const Polynomial q = P(o, "(y - 1)*(y + x)");
    for (const auto& br : regularGCDAll(p, q, y, chainOf(o, {"x^2 - 3*x + 2"}), serialCtx())) {
        if (br.gcd.isConstant()) continue;
        CHECK(!iteratedResultant(br.gcd.initial(), br.chain).isZero());
        CHECK(pseudoRemainderByChain(pseudoRemainderFull(p, br.gcd, y), br.chain).isZero());
        CHECK(pseudoRemainderByChain(pseudoRemainderFull(q, br.gcd, y), br.chain).isZero());
    }
    CHECK_THROWS_AS(
        regularGCDAll(P(o, "x"), P(o, "y"), y, RegularChain::empty(o), serialCtx()),
        std::invalid_argument);
}

TEST_CASE("kernel: serial runs stream identical sequences") {
    auto o = zyx();
    const auto T = chainOf(o, {"x^3 - 3*x^2 + 2*x"});
    const Polynomial p = P(o, "2*y*x^2 - x^2 - 3*y*x + x");
    std::vector<std::string> first, second;
    for (const auto& c : intersectAll(p, T, serialCtx())) first.push_back(c.format());
    for (const auto& c : intersectAll(p, T, serialCtx())) second.push_back(c.format());
    CHECK(first == second);
}

TEST_CASE("kernel: fine-grained streaming matches the serial sequence") {
    auto o = zyx();
    const auto T = chainOf(o, {"x^3 - 3*x^2 + 2*x"});
    const Polynomial p = P(o, "2*y*x^2 - x^2 - 3*y*x + x");

    std::vector<std::string> serialSeq;
    for (const auto& c : intersectAll(p, T, serialCtx())) serialSeq.push_back(c.format());

    WorkerPool pool(2);
    KernelContext fineCtx{SolveConfig{Strategy::Level, Mode::LazardWu, Parallel::CF, 2, true},
                          &pool};
    Generator<RegularChain> gen(&pool, true, [&](GeneratorChannel<RegularChain>& ch) {
        intersect(p, T, fineCtx, ch);
    });
    std::vector<std::string> fineSeq;
    RegularChain c = RegularChain::empty(o);
    while (gen.next(c)) fineSeq.push_back(c.format());
    CHECK(serialSeq == fineSeq);
}
