#include "support/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace trichain::oracles {

namespace {

// determinant by cofactor expansion along the first row
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const OrderPtr& order) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(order, Rational(1));
    if (n == 1) return m[0][0];
    Polynomial det(order);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].isZero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * determinant(minor, order);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// rows of the matrix whose minors define the subresultants:
// a*v^(n-j-1) .. a, then b*v^(m-j-1) .. b, as coefficient vectors on
// v^(m+n-j-1) .. v^0
std::vector<std::vector<Polynomial>> subresultantRows(const Polynomial& a, const Polynomial& b,
                                                      Variable v, unsigned j) {
    const int m = a.degreeIn(v);
    const int n = b.degreeIn(v);
    const std::size_t cols = static_cast<std::size_t>(m + n - static_cast<int>(j));
    auto rowOf = [&](const Polynomial& p, unsigned shift) {
        // column c holds the coefficient of v^(cols-1-c) in p*v^shift
        std::vector<Polynomial> row;
        row.reserve(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            const int power = static_cast<int>(cols) - 1 - static_cast<int>(c) -
                              static_cast<int>(shift);
            row.push_back(power < 0 ? Polynomial(a.order())
                                    : p.coefficientOf(v, static_cast<unsigned>(power)));
        }
        return row;
    };
    std::vector<std::vector<Polynomial>> rows;
    for (int s = n - static_cast<int>(j) - 1; s >= 0; --s)
        rows.push_back(rowOf(a, static_cast<unsigned>(s)));
    for (int s = m - static_cast<int>(j) - 1; s >= 0; --s)
        rows.push_back(rowOf(b, static_cast<unsigned>(s)));
    return rows;
}

}  // namespace

Polynomial sylvesterResultant(const Polynomial& a, const Polynomial& b, Variable v) {
    const int m = a.degreeIn(v);
    const int n = b.degreeIn(v);
    if (m < 1 || n < 1) throw std::invalid_argument("sylvesterResultant: degree < 1");
    const auto rows = subresultantRows(a, b, v, 0);
    return determinant(rows, a.order());
}

Polynomial subresultantDeterminant(const Polynomial& a, const Polynomial& b, Variable v,
                                   unsigned j) {
    const int m = a.degreeIn(v);
    const int n = b.degreeIn(v);
    if (m < n || n < 1 || static_cast<int>(j) >= n)
        throw std::invalid_argument("subresultantDeterminant: bad degrees");
    const auto rows = subresultantRows(a, b, v, j);
    const std::size_t nrows = rows.size();    // m + n - 2j
    const std::size_t cols = rows[0].size();  // m + n - j
    Polynomial out(a.order());
    const Polynomial vp = Polynomial::variable(a.order(), v);
    for (unsigned k = 0; k <= j; ++k) {
        // square minor: the first nrows-1 columns plus the column of v^k
        const std::size_t extra = cols - 1 - k;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(nrows);
        for (const auto& row : rows) {
            std::vector<Polynomial> r(row.begin(),
                                      row.begin() + static_cast<std::ptrdiff_t>(nrows - 1));
            r.push_back(row[extra]);
            minor.push_back(std::move(r));
        }
        out = out + determinant(minor, a.order()) * vp.pow(k);
    }
    return out;
}

Polynomial euclidGcd(const Polynomial& a, const Polynomial& b, Variable v) {
    auto degOf = [&](const Polynomial& p) {
        const int d = p.degreeIn(v);
        return d == kDegreeOfZero ? -1 : d;
    };
    Polynomial r0 = a, r1 = b;
    while (!r1.isZero() && degOf(r1) >= 0) {
        const int d1 = degOf(r1);
        if (d1 == 0) {
            r0 = std::move(r1);
            r1 = Polynomial(a.order());
            break;
        }
        Polynomial r = r0;
        const Rational lc1 = r1.coefficientOf(v, static_cast<unsigned>(d1)).constantValue();
        while (!r.isZero() && degOf(r) >= d1) {
            const int k = degOf(r);
            const Rational c = r.coefficientOf(v, static_cast<unsigned>(k)).constantValue() / lc1;
            Monomial mono{std::vector<std::uint32_t>(a.order()->size(), 0)};
            mono.exps[v.pos] = static_cast<std::uint32_t>(k - d1);
            const Polynomial t = Polynomial::fromTerms(a.order(), {Term{mono, c}});
            r = r - t * r1;
        }
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    if (r0.isZero()) return r0;
    const int d0 = degOf(r0);
    const Rational lead = r0.coefficientOf(v, static_cast<unsigned>(d0)).constantValue();
    return r0.scaled(lead.inverse());
}

Polynomial randomPolynomial(std::mt19937_64& rng, const OrderPtr& order, unsigned nvars,
                            unsigned maxDeg, unsigned maxTerms) {
    std::uniform_int_distribution<unsigned> termCount(0, maxTerms);
    std::uniform_int_distribution<unsigned> expDist(0, maxDeg);
    std::uniform_int_distribution<long> numDist(-9, 9);
    std::uniform_int_distribution<long> denDist(1, 4);
    std::vector<Term> terms;
    const unsigned n = termCount(rng);
    for (unsigned t = 0; t < n; ++t) {
        Monomial m{std::vector<std::uint32_t>(order->size(), 0)};
        for (unsigned i = 0; i < nvars && i < order->size(); ++i) m.exps[i] = expDist(rng);
        const long num = numDist(rng);
        if (num == 0) continue;
        terms.push_back(Term{std::move(m), Rational(num, denDist(rng))});
    }
    return Polynomial::fromTerms(order, std::move(terms));
}

std::vector<Point> gridSolutions(const SystemFile& sys, long bound) {
    const std::size_t n = sys.order->size();
    std::vector<Point> out;
    std::vector<long> idx(n, -bound);
    for (;;) {
        Point p(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) p[i] = Rational(idx[i]);
        bool solves = true;
        for (const auto& f : sys.polynomials) {
            std::map<std::uint32_t, Rational> bind;
            for (std::uint32_t i = 0; i < n; ++i) bind.emplace(i, p[i]);
            if (!f.evaluate(bind).isZero()) {
                solves = false;
                break;
            }
        }
        if (solves) out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < n && ++idx[i] > bound) idx[i++] = -bound;
        if (i == n) break;
    }
    return out;
}

std::vector<Point> enumerateDecomposition(const Decomposition& d) {
    std::vector<Point> all;
    for (const auto& T : d.components) {
        const auto pts = enumerateChainPoints(T);
        if (!pts) continue;
        all.insert(all.end(), pts->begin(), pts->end());
    }
    auto less = [](const Point& a, const Point& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    std::sort(all.begin(), all.end(), less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool samePointSet(std::vector<Point> a, std::vector<Point> b) {
    auto less = [](const Point& x, const Point& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return a == b;
}

}  // namespace trichain::oracles
