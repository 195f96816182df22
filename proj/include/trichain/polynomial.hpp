#ifndef TRICHAIN_POLYNOMIAL_HPP
#define TRICHAIN_POLYNOMIAL_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trichain/rational.hpp"
#include "trichain/variable_order.hpp"

namespace trichain {

/// Degree of the zero polynomial (stands in for minus infinity).
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// Exponent vector, indexed by variable position (0 = greatest variable).
struct Monomial {
    std::vector<std::uint32_t> exps;

    unsigned totalDegree() const;
    bool isConstant() const;
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

/// Graded-lexicographic comparison under the ambient order: higher total
/// degree first, ties broken by the exponent of the greatest variable.
int compareGradedLex(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial over Q, immutable after construction.
/// Terms are kept sorted in descending graded-lex order, with no zero
/// coefficients, so formatting and iteration are deterministic.
class Polynomial {
public:
    explicit Polynomial(OrderPtr order) : order_(std::move(order)) {}

    static Polynomial zero(OrderPtr order) { return Polynomial(std::move(order)); }
    static Polynomial constant(OrderPtr order, Rational c);
    static Polynomial variable(OrderPtr order, Variable v);
    /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
    static Polynomial fromTerms(OrderPtr order, std::vector<Term> terms);

    const OrderPtr& order() const { return order_; }
    std::size_t nvars() const { return order_->size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || terms_.front().mono.isConstant(); }
    /// Value of a constant polynomial (zero for the zero polynomial).
    Rational constantValue() const;

    int totalDegree() const;  // kDegreeOfZero for 0
    int degreeIn(Variable v) const;
    bool contains(Variable v) const { return degreeIn(v) > 0; }

    /// Greatest variable with positive degree; nullopt for constants.
    std::optional<Variable> mainVariable() const;

    /// Coefficient of v^k, a polynomial in the remaining variables.
    Polynomial coefficientOf(Variable v, unsigned k) const;
    /// Recursive view in v: coefficients indexed by power, size degree+1.
    std::vector<Polynomial> coefficientsIn(Variable v) const;
    /// Leading coefficient w.r.t. the main variable (the initial h).
    /// Throws std::invalid_argument for constants.
    Polynomial initial() const;
    /// p minus its leading term in v (the reductum w.r.t. v).
    Polynomial reductum(Variable v) const;

    Polynomial derivative(Variable v) const;

    /// Substitution; partial bindings allowed.
    Polynomial evaluate(const std::map<std::uint32_t, Rational>& bindings) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Total order on polynomials of one ambient order, used for
    /// deterministic tie-breaking: by (total degree, terms graded-lex).
    static int compare(const Polynomial& a, const Polynomial& b);

    /// Canonical text form; parse(format(p)) == p.
    std::string format() const;

private:
    void normalize();

    OrderPtr order_;
    std::vector<Term> terms_;
};

/// Requires matching variable orders; throws std::invalid_argument.
void requireSameOrder(const Polynomial& a, const Polynomial& b);

// ---- parsing ---------------------------------------------------------

struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), pos(position) {}
    std::size_t pos;
};

/// Parses the shared polynomial grammar: integers, rationals a/b,
/// variables, binary + - *, unary -, ^ with non-negative integer
/// exponent, parentheses; '*' is mandatory; whitespace insignificant.
Polynomial parse(const std::string& text, const OrderPtr& order);

// ---- algorithms ------------------------------------------------------

/// Canonical normalization: integer-primitive with positive leading
/// (graded-lex) coefficient. Zero stays zero.
Polynomial canonical(const Polynomial& p);

/// Content of p w.r.t. v: gcd of its v-coefficients (canonical).
Polynomial contentIn(const Polynomial& p, Variable v);
Polynomial primitivePartIn(const Polynomial& p, Variable v);

struct PseudoDivision {
    Polynomial quotient;
    Polynomial remainder;
    unsigned e = 0;  // initial(b)^e * a == quotient*b + remainder
};

/// Pseudo-division of a by b w.r.t. v; deg_v(b) >= 1 required.
PseudoDivision pseudoDivide(const Polynomial& a, const Polynomial& b, Variable v);

/// Pseudo-remainder with the full power e = max(deg_v(a)-deg_v(b)+1, 0).
Polynomial pseudoRemainderFull(const Polynomial& a, const Polynomial& b, Variable v);

/// Exact division; throws std::domain_error if b does not divide a.
Polynomial exactDivide(const Polynomial& a, const Polynomial& b);

/// Multivariate gcd via primitive remainder sequences, canonical form.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Resultant w.r.t. v, Sylvester-determinant sign convention with a
/// listed first. Both arguments need positive degree in v.
Polynomial resultant(const Polynomial& a, const Polynomial& b, Variable v);

/// Subresultants S_0..S_{deg_v(b)} (determinantal values); requires
/// deg_v(a) >= deg_v(b) >= 1.
std::vector<Polynomial> subresultantChain(const Polynomial& a, const Polynomial& b, Variable v);

/// p / gcd(p, dp/dv), canonical; same roots in v, squarefree in v.
Polynomial squarefreePart(const Polynomial& p, Variable v);

struct ExtendedEuclidResult {
    Polynomial u;
    Polynomial w;
    Polynomial g;  // monic gcd; u*a + w*b == g
};

/// Extended Euclid for univariate-in-v polynomials with rational
/// coefficients; b must be nonzero.
ExtendedEuclidResult extendedEuclid(const Polynomial& a, const Polynomial& b, Variable v);

/// True when every variable occurring in p equals v (constants allowed).
bool isUnivariateIn(const Polynomial& p, Variable v);

/// Rational roots of a univariate-in-v polynomial with rational
/// coefficients, ascending, without multiplicity.
std::vector<Rational> rationalRoots(const Polynomial& p, Variable v);

}  // namespace trichain

#endif
