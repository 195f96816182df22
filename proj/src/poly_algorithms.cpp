#include <algorithm>
#include <stdexcept>

#include "trichain/polynomial.hpp"

namespace trichain {

namespace {

Polynomial monomialOf(const OrderPtr& order, Variable v, unsigned k, Rational c) {
    Monomial m{std::vector<std::uint32_t>(order->size(), 0)};
    m.exps[v.pos] = k;
    return Polynomial::fromTerms(order, {Term{std::move(m), std::move(c)}});
}

int degOrZero(const Polynomial& p, Variable v) {
    const int d = p.degreeIn(v);
    return d == kDegreeOfZero ? 0 : d;
}

}  // namespace

Polynomial canonical(const Polynomial& p) {
    if (p.isZero()) return p;
    Integer den(1), num(0);
    for (const auto& t : p.terms()) {
        den = lcm(den, t.coeff.denominator());
        num = gcd(num, t.coeff.numerator());
    }
    Rational scale(den, num);  // num != 0 since no zero coefficients
    if (p.terms().front().coeff.isNegative() != scale.isNegative()) scale = -scale;
    return p.scaled(scale);
}

Polynomial contentIn(const Polynomial& p, Variable v) {
    Polynomial c(p.order());
    for (const auto& coeff : p.coefficientsIn(v)) {
        if (coeff.isZero()) continue;
        c = gcd(c, coeff);
        if (c.isConstant()) break;
    }
    if (p.isConstant()) c = canonical(p);
    return c;
}

Polynomial primitivePartIn(const Polynomial& p, Variable v) {
    if (p.isZero()) return p;
    const Polynomial c = contentIn(p, v);
    if (c.isConstant()) return canonical(p);
    return canonical(exactDivide(p, c));
}

PseudoDivision pseudoDivide(const Polynomial& a, const Polynomial& b, Variable v) {
    requireSameOrder(a, b);
    const int d = b.degreeIn(v);
    if (d < 1) throw std::invalid_argument("pseudoDivide: divisor is constant in v");
    const Polynomial h = b.coefficientOf(v, static_cast<unsigned>(d));
    PseudoDivision out{Polynomial(a.order()), a, 0};
    while (!out.remainder.isZero() && out.remainder.degreeIn(v) >= d) {
        const int k = out.remainder.degreeIn(v);
        const Polynomial c = out.remainder.coefficientOf(v, static_cast<unsigned>(k));
        const Polynomial shift = monomialOf(a.order(), v, static_cast<unsigned>(k - d), Rational(1));
        out.remainder = h * out.remainder - c * shift * b;
        out.quotient = h * out.quotient + c * shift;
        ++out.e;
    }
    return out;
}

Polynomial pseudoRemainderFull(const Polynomial& a, const Polynomial& b, Variable v) {
    const int da = a.degreeIn(v);
    const int db = b.degreeIn(v);
    auto [q, r, e] = pseudoDivide(a, b, v);
    (void)q;
    const unsigned full = da >= db ? static_cast<unsigned>(da - db + 1) : 0u;
    if (e < full) {
        const Polynomial h = b.coefficientOf(v, static_cast<unsigned>(db));
        r = h.pow(full - e) * r;
    }
    return r;
}

Polynomial exactDivide(const Polynomial& a, const Polynomial& b) {
    requireSameOrder(a, b);
    if (b.isZero()) throw std::domain_error("exactDivide: division by zero");
    Polynomial r = a;
    Polynomial q(a.order());
    const Term& lb = b.terms().front();
    while (!r.isZero()) {
        const Term& lr = r.terms().front();
        Monomial m{std::vector<std::uint32_t>(a.nvars(), 0)};
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (lr.mono.exps[i] < lb.mono.exps[i])
                throw std::domain_error("exactDivide: not divisible");
            m.exps[i] = lr.mono.exps[i] - lb.mono.exps[i];
        }
        const Polynomial t =
            Polynomial::fromTerms(a.order(), {Term{std::move(m), lr.coeff / lb.coeff}});
        q = q + t;
        r = r - t * b;
    }
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.isZero()) return canonical(b);
    if (b.isZero()) return canonical(a);
    requireSameOrder(a, b);
    if (a.isConstant() || b.isConstant())
        return Polynomial::constant(a.order(), Rational(1));

    const Variable va = *a.mainVariable();
    const Variable vb = *b.mainVariable();
    const Variable v = greaterThan(va, vb) ? va : vb;
    if (a.degreeIn(v) <= 0) return gcd(a, contentIn(b, v));
    if (b.degreeIn(v) <= 0) return gcd(contentIn(a, v), b);

    const Polynomial ca = contentIn(a, v);
    const Polynomial cb = contentIn(b, v);
    const Polynomial c = gcd(ca, cb);
    Polynomial pa = exactDivide(a, ca);
    Polynomial pb = exactDivide(b, cb);
    if (pa.degreeIn(v) < pb.degreeIn(v)) std::swap(pa, pb);
    for (;;) {
        const Polynomial r = pseudoRemainderFull(pa, pb, v);
        if (r.isZero()) return canonical(c * primitivePartIn(pb, v));
        if (r.degreeIn(v) <= 0) return canonical(c);
        pa = std::move(pb);
        pb = primitivePartIn(r, v);
    }
}

std::vector<Polynomial> subresultantChain(const Polynomial& a, const Polynomial& b, Variable v) {
    requireSameOrder(a, b);
    const int da = a.degreeIn(v);
    const int db = b.degreeIn(v);
    if (da < 1 || db < 1 || da < db)
        throw std::invalid_argument("subresultantChain: need deg_v(a) >= deg_v(b) >= 1");

    std::vector<Polynomial> S(static_cast<std::size_t>(db) + 1, Polynomial(a.order()));
    const Polynomial lcB = b.coefficientOf(v, static_cast<unsigned>(db));
    S[static_cast<std::size_t>(db)] =
        da > db ? lcB.pow(static_cast<unsigned>(da - db - 1)) * b : b;

    Polynomial s = lcB.pow(static_cast<unsigned>(da - db));
    Polynomial A = b;
    Polynomial B = pseudoRemainderFull(a, -b, v);
    for (;;) {
        if (B.isZero()) break;
        const int d = A.degreeIn(v);
        const int e = degOrZero(B, v);
        S[static_cast<std::size_t>(d - 1)] = B;
        const int delta = d - e;
        Polynomial C = B;
        if (delta > 1) {
            const Polynomial lcSmall = B.coefficientOf(v, static_cast<unsigned>(e));
            C = exactDivide(lcSmall.pow(static_cast<unsigned>(delta - 1)) * B,
                            s.pow(static_cast<unsigned>(delta - 1)));
            S[static_cast<std::size_t>(e)] = C;
        }
        if (e == 0) break;
        const Polynomial lcA = A.coefficientOf(v, static_cast<unsigned>(d));
        B = exactDivide(pseudoRemainderFull(A, -B, v), s.pow(static_cast<unsigned>(delta)) * lcA);
        A = std::move(C);
        s = A.coefficientOf(v, static_cast<unsigned>(e));
    }
    return S;
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, Variable v) {
    const int da = a.degreeIn(v);
    const int db = b.degreeIn(v);
    if (da < 1 || db < 1)
        throw std::invalid_argument("resultant: both arguments need positive degree in v");
    if (da < db) {
        Polynomial r = resultant(b, a, v);
        if ((static_cast<unsigned>(da) & 1u) && (static_cast<unsigned>(db) & 1u)) r = -r;
        return r;
    }
    return subresultantChain(a, b, v)[0];
}

Polynomial squarefreePart(const Polynomial& p, Variable v) {
    if (p.degreeIn(v) < 1) throw std::invalid_argument("squarefreePart: deg_v(p) < 1");
    const Polynomial g = gcd(p, p.derivative(v));
    if (g.isConstant()) return canonical(p);
    return canonical(exactDivide(p, g));
}

bool isUnivariateIn(const Polynomial& p, Variable v) {
    for (const auto& t : p.terms())
        for (std::uint32_t pos = 0; pos < t.mono.exps.size(); ++pos)
            if (t.mono.exps[pos] != 0 && pos != v.pos) return false;
    return true;
}

namespace {

struct UniDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

// Classical division for univariate-in-v rational-coefficient polynomials.
UniDivMod divmodUnivariate(const Polynomial& a, const Polynomial& b, Variable v) {
    const int d = degOrZero(b, v);
    const Rational lb = b.coefficientOf(v, static_cast<unsigned>(d)).constantValue();
    UniDivMod out{Polynomial(a.order()), a};
    while (!out.remainder.isZero() && degOrZero(out.remainder, v) >= d) {
        const int k = degOrZero(out.remainder, v);
        if (k == 0 && d > 0) break;
        const Rational c =
            out.remainder.coefficientOf(v, static_cast<unsigned>(k)).constantValue() / lb;
        const Polynomial t = monomialOf(a.order(), v, static_cast<unsigned>(k - d), c);
        out.quotient = out.quotient + t;
        out.remainder = out.remainder - t * b;
        if (d == 0) break;
    }
    return out;
}

}  // namespace

ExtendedEuclidResult extendedEuclid(const Polynomial& a, const Polynomial& b, Variable v) {
    requireSameOrder(a, b);
    if (!isUnivariateIn(a, v) || !isUnivariateIn(b, v))
        throw std::invalid_argument("extendedEuclid: inputs must be univariate in v");
    if (b.isZero()) throw std::invalid_argument("extendedEuclid: b must be nonzero");

    const Polynomial one = Polynomial::constant(a.order(), Rational(1));
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = one, u1 = Polynomial(a.order());
    Polynomial w0 = Polynomial(a.order()), w1 = one;
    while (!r1.isZero()) {
        auto [q, rem] = divmodUnivariate(r0, r1, v);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Polynomial u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Polynomial w2 = w0 - q * w1;
        w0 = std::move(w1);
        w1 = std::move(w2);
    }
    // normalize the gcd monic
    const Rational lead =
        r0.coefficientOf(v, static_cast<unsigned>(degOrZero(r0, v))).constantValue();
    const Rational inv = lead.inverse();
    return ExtendedEuclidResult{u0.scaled(inv), w0.scaled(inv), r0.scaled(inv)};
}

namespace {

// Divisors by trial division; callers keep inputs desk-scale.
std::vector<Integer> positiveDivisors(Integer n) {
    if (sgn(n) < 0) n = -n;
    std::vector<Integer> low, high;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            low.push_back(i);
            Integer other = n / i;
            if (other != i) high.push_back(std::move(other));
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

const Integer kRootSearchBound("1000000000000");

}  // namespace

std::vector<Rational> rationalRoots(const Polynomial& p, Variable v) {
    if (p.isZero()) throw std::invalid_argument("rationalRoots: zero polynomial");
    if (!isUnivariateIn(p, v)) throw std::invalid_argument("rationalRoots: not univariate");
    std::vector<Rational> roots;
    Polynomial q = canonical(p);
    int d = degOrZero(q, v);
    if (d >= 1 && q.coefficientOf(v, 0).isZero()) {
        roots.push_back(Rational(0));
        while (d >= 1 && q.coefficientOf(v, 0).isZero()) {
            q = exactDivide(q, Polynomial::variable(q.order(), v));
            d = degOrZero(q, v);
        }
    }
    while (d >= 1) {
        const Integer a0 = q.coefficientOf(v, 0).constantValue().numerator();
        const Integer an = q.coefficientOf(v, static_cast<unsigned>(d)).constantValue().numerator();
        if (abs(a0) > kRootSearchBound || abs(an) > kRootSearchBound) break;
        bool found = false;
        for (const Integer& num : positiveDivisors(a0)) {
            for (const Integer& den : positiveDivisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand(sign > 0 ? num : Integer(-num), den);
                    std::map<std::uint32_t, Rational> bind{{v.pos, cand}};
                    if (q.evaluate(bind).isZero()) {
                        roots.push_back(cand);
                        const Polynomial lin =
                            Polynomial::variable(q.order(), v) -
                            Polynomial::constant(q.order(), cand);
                        q = canonical(exactDivide(q, lin));
                        d = degOrZero(q, v);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace trichain
