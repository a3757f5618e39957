#pragma once

#include "qforms/series.hpp"
#include "qforms/weighted_poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qforms {

namespace linalg {

enum class SolveStatus { unique, rank_deficient, inconsistent };

struct SolveOutcome {
    SolveStatus status = SolveStatus::unique;
    std::vector<Rational> solution;
};

// Exact Gaussian elimination for a (possibly overdetermined) system A x = b,
// with partial pivoting on the magnitude of the numerators. A unique
// solution requires full column rank and every surplus row consistent.
SolveOutcome solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace linalg

class DiscoveryError : public std::runtime_error {
public:
    enum class Kind { basis_deficiency, verification_failure };

    DiscoveryError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// A discovered identity c0 + c1 Psi_{0,k-1} = rhs with integer constants and
// an integer polynomial in e and scriptQ whose monomials e^m scriptQ^n all
// satisfy 2m + 4n = k, n >= 1.
struct Relation {
    int k = 0;
    Integer lhs_constant;   // c0
    Integer lhs_psi_coeff;  // c1
    WeightedPoly rhs;
    long verified_to = 0;

    std::string str() const;
};

// Exponent pairs (m, n) with 2m + 4n = k, m >= 0, n >= 1, in decreasing m.
std::vector<std::pair<int, int>> monomial_basis(int k);

// Finds the unique constants expressing curlyE_k in the basis
// {e^m scriptQ^n : 2m + 4n = k, n >= 1} by exact linear algebra on the
// q-coefficients 0..solve_order-1, re-verifies the resulting identity to
// verify_order, and clears denominators to the integer form.
// Pass 0 to get the defaults solve_order = |basis| + 8, verify_order = 100.
Relation solve_relation(int k, long solve_order = 0, long verify_order = 0);

// Left side c0 + c1 Psi_{0,k-1} of a relation as a series.
LaurentSeries relation_lhs_series(const Relation& rel, long order);
// Right side as a series.
LaurentSeries relation_rhs_series(const Relation& rel, long order);

// The seven printed reference relations for k = 4, 6, ..., 16.
const std::vector<Relation>& table1();

}  // namespace qforms
