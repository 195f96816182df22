#ifndef TRICHAIN_REGULAR_CHAIN_HPP
#define TRICHAIN_REGULAR_CHAIN_HPP

#include <string>
#include <vector>

#include "trichain/polynomial.hpp"

namespace trichain {

/// An ordered set of polynomials with strictly increasing main variables,
/// stored bottom-first in canonical form. Carries quasi-component
/// semantics: W(T) = { points where all members vanish and all initials
/// are nonzero }. Immutable.
class RegularChain {
public:
    static RegularChain empty(OrderPtr order) { return RegularChain(std::move(order)); }

    /// Members must already be reduced against the part below and come in
    /// strictly ascending main-variable order.
    static RegularChain fromMembers(OrderPtr order, std::vector<Polynomial> ascending);

    /// T ∪ {p}; mainVariable(p) must exceed every existing main variable
    /// and p must be non-constant. Stores canonical(p).
    RegularChain extended(const Polynomial& p) const;

    std::size_t height() const { return members_.size(); }
    std::size_t dimension() const { return order_->size() - members_.size(); }
    const OrderPtr& order() const { return order_; }
    const std::vector<Polynomial>& members() const { return members_; }

    bool isAlgebraic(Variable v) const { return memberWithMain(v) != nullptr; }
    const Polynomial* memberWithMain(Variable v) const;

    /// Members with main variable strictly below v, as a chain.
    RegularChain lowerPart(Variable v) const;
    /// Members with main variable strictly above v, ascending.
    std::vector<Polynomial> upperMembers(Variable v) const;

    /// "{top; ...; bottom}" in canonical member form.
    std::string format() const;
    /// Member texts, top first (greatest main variable first).
    std::vector<std::string> memberTexts() const;

    friend bool operator==(const RegularChain& a, const RegularChain& b);
    /// Deterministic total order: by height, then member-wise bottom-up.
    static int compare(const RegularChain& a, const RegularChain& b);

private:
    explicit RegularChain(OrderPtr order) : order_(std::move(order)) {}

    OrderPtr order_;
    std::vector<Polynomial> members_;  // ascending main variable
};

/// Iterated lazy pseudo-remainder, reduced top-down. Zero result means p
/// vanishes on W(T) (exactly in the "only if" direction).
Polynomial pseudoRemainderByChain(const Polynomial& p, const RegularChain& T);

/// Successively eliminates each main variable of T from p via resultants,
/// top-down; a nonzero result certifies p regular modulo the chain.
Polynomial iteratedResultant(const Polynomial& p, const RegularChain& T);

struct ChainValidation {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Full invariant check (triangular shape, canonical reduced members,
/// regular initials, squarefree members over the tower below).
ChainValidation validateChain(const RegularChain& T);

}  // namespace trichain

#endif
