#ifndef TRICHAIN_TESTS_ORACLES_HPP
#define TRICHAIN_TESTS_ORACLES_HPP

#include <random>

#include "trichain/harness.hpp"

namespace trichain::oracles {

/// Resultant by cofactor expansion of the Sylvester matrix (a's rows
/// first). Independent of the subresultant implementation.
Polynomial sylvesterResultant(const Polynomial& a, const Polynomial& b, Variable v);

/// Determinantal value of the j-th subresultant of (a, b) w.r.t. v,
/// straight from the defining minors.
Polynomial subresultantDeterminant(const Polynomial& a, const Polynomial& b, Variable v,
                                   unsigned j);

/// Plain monic gcd of univariate rational polynomials by the Euclidean
/// algorithm (no subresultants).
Polynomial euclidGcd(const Polynomial& a, const Polynomial& b, Variable v);

/// Deterministic random polynomial: at most maxTerms terms over the
/// first nvars variables of the order, degree <= maxDeg per variable.
Polynomial randomPolynomial(std::mt19937_64& rng, const OrderPtr& order, unsigned nvars,
                            unsigned maxDeg, unsigned maxTerms);

/// All solutions of the system on the integer grid [-bound, bound]^n;
/// independent of the solver.
std::vector<Point> gridSolutions(const SystemFile& sys, long bound);

/// Union of back-substitution enumerations over a decomposition's
/// components, sorted and deduplicated.
std::vector<Point> enumerateDecomposition(const Decomposition& d);

bool samePointSet(std::vector<Point> a, std::vector<Point> b);

}  // namespace trichain::oracles

#endif
