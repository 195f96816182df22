#ifndef TRICHAIN_VARIABLE_ORDER_HPP
#define TRICHAIN_VARIABLE_ORDER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trichain {

class VariableOrder;
using OrderPtr = std::shared_ptr<const VariableOrder>;

/// A variable of some VariableOrder, identified by its position.
/// Position 0 is the greatest variable.
struct Variable {
    std::uint32_t pos = 0;

    friend bool operator==(Variable a, Variable b) { return a.pos == b.pos; }
    friend bool operator!=(Variable a, Variable b) { return a.pos != b.pos; }
};

/// True when a is greater than b in the ambient order.
inline bool greaterThan(Variable a, Variable b) { return a.pos < b.pos; }
inline bool lessThan(Variable a, Variable b) { return a.pos > b.pos; }

/// The ambient ordered set of variable names, listed greatest-first.
/// Immutable; shared between all polynomials of one system.
class VariableOrder {
public:
    /// Validates and builds an order. Symbols must be distinct, non-empty
    /// identifiers ([A-Za-z_][A-Za-z0-9_]*). Throws std::invalid_argument.
    static OrderPtr make(std::vector<std::string> greatestFirst);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(Variable v) const { return symbols_.at(v.pos); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    std::optional<Variable> find(std::string_view name) const;

    /// Value equality (same symbols in the same order).
    bool sameAs(const VariableOrder& other) const { return symbols_ == other.symbols_; }

private:
    explicit VariableOrder(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}
    std::vector<std::string> symbols_;
};

}  // namespace trichain

#endif
