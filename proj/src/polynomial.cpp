#include "trichain/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trichain {

// ---- VariableOrder ----------------------------------------------------

namespace {

bool validIdentifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace

OrderPtr VariableOrder::make(std::vector<std::string> greatestFirst) {
    for (const auto& s : greatestFirst) {
        if (!validIdentifier(s))
            throw std::invalid_argument("VariableOrder: bad symbol '" + s + "'");
    }
    for (std::size_t i = 0; i < greatestFirst.size(); ++i)
        for (std::size_t j = i + 1; j < greatestFirst.size(); ++j)
            if (greatestFirst[i] == greatestFirst[j])
                throw std::invalid_argument("VariableOrder: duplicate symbol '" + greatestFirst[i] + "'");
    return OrderPtr(new VariableOrder(std::move(greatestFirst)));
}

std::optional<Variable> VariableOrder::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return Variable{static_cast<std::uint32_t>(i)};
    return std::nullopt;
}

// ---- Monomial ----------------------------------------------------------

unsigned Monomial::totalDegree() const {
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::isConstant() const {
    for (auto e : exps)
        if (e != 0) return false;
    return true;
}

int compareGradedLex(const Monomial& a, const Monomial& b) {
    const unsigned da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db ? -1 : 1;
    // exps[0] is the greatest variable; larger exponent there wins
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    }
    return 0;
}

// ---- Polynomial construction -------------------------------------------

Polynomial Polynomial::constant(OrderPtr order, Rational c) {
    Polynomial p(std::move(order));
    if (!c.isZero()) {
        p.terms_.push_back(Term{Monomial{std::vector<std::uint32_t>(p.nvars(), 0)}, std::move(c)});
    }
    return p;
}

Polynomial Polynomial::variable(OrderPtr order, Variable v) {
    Polynomial p(std::move(order));
    if (v.pos >= p.nvars()) throw std::invalid_argument("Polynomial::variable: position out of range");
    Monomial m{std::vector<std::uint32_t>(p.nvars(), 0)};
    m.exps[v.pos] = 1;
    p.terms_.push_back(Term{std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::fromTerms(OrderPtr order, std::vector<Term> terms) {
    Polynomial p(std::move(order));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    for (auto& t : terms_) {
        if (t.mono.exps.size() != nvars())
            throw std::invalid_argument("Polynomial: exponent vector arity mismatch");
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return compareGradedLex(x.mono, y.mono) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff.isZero()) merged.pop_back();
        } else if (!t.coeff.isZero()) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

// ---- queries -----------------------------------------------------------

Rational Polynomial::constantValue() const {
    if (isZero()) return Rational(0);
    if (!isConstant()) throw std::invalid_argument("constantValue: polynomial is not constant");
    return terms_.front().coeff;
}

int Polynomial::totalDegree() const {
    if (isZero()) return kDegreeOfZero;
    return static_cast<int>(terms_.front().mono.totalDegree());
}

int Polynomial::degreeIn(Variable v) const {
    if (isZero()) return kDegreeOfZero;
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exps[v.pos]);
    return static_cast<int>(d);
}

std::optional<Variable> Polynomial::mainVariable() const {
    std::optional<Variable> best;
    for (const auto& t : terms_) {
        for (std::uint32_t pos = 0; pos < t.mono.exps.size(); ++pos) {
            if (t.mono.exps[pos] > 0) {
                if (!best || pos < best->pos) best = Variable{pos};
                break;  // positions ascend within a monomial scan
            }
        }
    }
    return best;
}

Polynomial Polynomial::coefficientOf(Variable v, unsigned k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exps[v.pos] == k) {
            Term c = t;
            c.mono.exps[v.pos] = 0;
            out.push_back(std::move(c));
        }
    }
    return fromTerms(order_, std::move(out));
}

std::vector<Polynomial> Polynomial::coefficientsIn(Variable v) const {
    const int d = degreeIn(v);
    std::vector<Polynomial> out;
    if (d == kDegreeOfZero) return out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) out.push_back(coefficientOf(v, static_cast<unsigned>(k)));
    return out;
}

Polynomial Polynomial::initial() const {
    auto v = mainVariable();
    if (!v) throw std::invalid_argument("initial: constant polynomial has no initial");
    return coefficientOf(*v, static_cast<unsigned>(degreeIn(*v)));
}

Polynomial Polynomial::reductum(Variable v) const {
    const int d = degreeIn(v);
    if (d <= 0) return Polynomial(order_);
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono.exps[v.pos] != static_cast<std::uint32_t>(d)) out.push_back(t);
    return fromTerms(order_, std::move(out));
}

Polynomial Polynomial::derivative(Variable v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const auto e = t.mono.exps[v.pos];
        if (e == 0) continue;
        Term d = t;
        d.mono.exps[v.pos] = e - 1;
        d.coeff = d.coeff * Rational(static_cast<long>(e));
        out.push_back(std::move(d));
    }
    return fromTerms(order_, std::move(out));
}

Polynomial Polynomial::evaluate(const std::map<std::uint32_t, Rational>& bindings) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Term r = t;
        for (const auto& [pos, val] : bindings) {
            const auto e = r.mono.exps[pos];
            if (e == 0) continue;
            r.coeff = r.coeff * val.pow(e);
            r.mono.exps[pos] = 0;
        }
        if (!r.coeff.isZero()) out.push_back(std::move(r));
    }
    return fromTerms(order_, std::move(out));
}

// ---- arithmetic ---------------------------------------------------------

void requireSameOrder(const Polynomial& a, const Polynomial& b) {
    if (a.order() == b.order()) return;
    if (!a.order() || !b.order() || !a.order()->sameAs(*b.order()))
        throw std::invalid_argument("polynomial operands use different variable orders");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    requireSameOrder(a, b);
    // merge two sorted term lists
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const int c = compareGradedLex(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            out.push_back(a.terms_[i++]);
        } else if (c < 0) {
            out.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.isZero()) out.push_back(Term{a.terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    Polynomial r(a.order_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    requireSameOrder(a, b);
    if (a.isZero() || b.isZero()) return Polynomial(a.order_);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono;
            for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] += tb.mono.exps[k];
            out.push_back(Term{std::move(m), ta.coeff * tb.coeff});
        }
    }
    return Polynomial::fromTerms(a.order_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.isZero()) return Polynomial(order_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(order_, Rational(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u) r = r * base;
        if ((e >>= 1u) != 0) base = base * base;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    const int da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db ? -1 : 1;
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = compareGradedLex(a.terms_[i].mono, b.terms_[i].mono);
        if (c != 0) return c;
        if (a.terms_[i].coeff != b.terms_[i].coeff)
            return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

}  // namespace trichain
