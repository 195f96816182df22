#include "trichain/regular_chain.hpp"

#include <sstream>
#include <stdexcept>

namespace trichain {

RegularChain RegularChain::fromMembers(OrderPtr order, std::vector<Polynomial> ascending) {
    RegularChain T(std::move(order));
    for (auto& p : ascending) T = T.extended(p);
    return T;
}

RegularChain RegularChain::extended(const Polynomial& p) const {
    if (p.isConstant()) throw std::invalid_argument("chainExtend: member must be non-constant");
    requireSameOrder(p, Polynomial(order_));
    const Variable v = *p.mainVariable();
    if (!members_.empty()) {
        const Variable top = *members_.back().mainVariable();
        if (!greaterThan(v, top))
            throw std::invalid_argument("chainExtend: main variable must exceed the chain top");
    }
    RegularChain T(*this);
    T.members_.push_back(canonical(p));
    return T;
}

const Polynomial* RegularChain::memberWithMain(Variable v) const {
    for (const auto& m : members_)
        if (*m.mainVariable() == v) return &m;
    return nullptr;
}

RegularChain RegularChain::lowerPart(Variable v) const {
    RegularChain T(order_);
    for (const auto& m : members_)
        if (lessThan(*m.mainVariable(), v)) T.members_.push_back(m);
    return T;
}

std::vector<Polynomial> RegularChain::upperMembers(Variable v) const {
    std::vector<Polynomial> out;
    for (const auto& m : members_)
        if (greaterThan(*m.mainVariable(), v)) out.push_back(m);
    return out;
}

std::string RegularChain::format() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = members_.size(); i-- > 0;) {
        os << members_[i].format();
        if (i > 0) os << "; ";
    }
    os << '}';
    return os.str();
}

std::vector<std::string> RegularChain::memberTexts() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (std::size_t i = members_.size(); i-- > 0;) out.push_back(members_[i].format());
    return out;
}

bool operator==(const RegularChain& a, const RegularChain& b) {
    if (a.members_.size() != b.members_.size()) return false;
    for (std::size_t i = 0; i < a.members_.size(); ++i)
        if (a.members_[i] != b.members_[i]) return false;
    return true;
}

int RegularChain::compare(const RegularChain& a, const RegularChain& b) {
    if (a.height() != b.height()) return a.height() < b.height() ? -1 : 1;
    for (std::size_t i = 0; i < a.height(); ++i) {
        const int c = Polynomial::compare(a.members_[i], b.members_[i]);
        if (c != 0) return c;
    }
    return 0;
}

Polynomial pseudoRemainderByChain(const Polynomial& p, const RegularChain& T) {
    Polynomial r = p;
    const auto& ms = T.members();
    for (std::size_t i = ms.size(); i-- > 0;) {
        if (r.isZero()) return r;
        const Variable v = *ms[i].mainVariable();
        if (r.degreeIn(v) >= ms[i].degreeIn(v)) r = pseudoDivide(r, ms[i], v).remainder;
    }
    return r;
}

Polynomial iteratedResultant(const Polynomial& p, const RegularChain& T) {
    Polynomial r = p;
    const auto& ms = T.members();
    for (std::size_t i = ms.size(); i-- > 0;) {
        if (r.isZero()) return r;
        const Variable v = *ms[i].mainVariable();
        if (r.degreeIn(v) >= 1) r = resultant(r, ms[i], v);
    }
    return r;
}

ChainValidation validateChain(const RegularChain& T) {
    ChainValidation out;
    auto flag = [&](const std::string& s) {
        out.ok = false;
        out.problems.push_back(s);
    };

    const auto& ms = T.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& m = ms[i];
        if (m.isConstant()) {
            flag("member " + std::to_string(i) + " is constant");
            continue;
        }
        const Variable v = *m.mainVariable();
        if (i > 0 && !greaterThan(v, *ms[i - 1].mainVariable()))
            flag("main variables not strictly increasing at member " + std::to_string(i));
        if (canonical(m) != m) flag("member not in canonical form: " + m.format());
        for (std::size_t j = 0; j < i; ++j) {
            const Variable w = *ms[j].mainVariable();
            if (m.degreeIn(w) >= ms[j].degreeIn(w))
                flag("member " + m.format() + " not reduced against " + ms[j].format());
        }

        const RegularChain lower = T.lowerPart(v);
        const Polynomial init = m.initial();
        if (!init.isConstant() || init.isZero()) {
            const Polynomial reg = iteratedResultant(init, lower);
            if (reg.isZero()) flag("initial of " + m.format() + " is not regular below");
        }
        if (m.degreeIn(v) >= 2) {
            const Polynomial disc = resultant(m, m.derivative(v), v);
            if (disc.isZero()) {
                flag("member " + m.format() + " is not squarefree");
            } else if (!disc.isConstant()) {
                if (iteratedResultant(disc, lower).isZero())
                    flag("member " + m.format() + " not squarefree over the tower");
            }
        }
    }
    return out;
}

}  // namespace trichain
