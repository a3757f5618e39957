#pragma once

#include "qforms/rational.hpp"
#include "qforms/verdict.hpp"

#include <optional>

namespace qforms {

// r with n = r(r+1)/2, if n is a triangular number (n >= 0).
std::optional<long> triangular_index(long n);

// 8 sum_{j + k(k+1)/2 = n, j,k >= 0} wt(j), where the boundary value wt(0)
// defaults to 1/8. Equals (2r+1)^2 when n = r(r+1)/2 and 0 otherwise.
Rational theorem5_lhs(long n, const Rational& wt_zero = Rational(1, 8));

// Expected value (2r+1)^2 or 0 of the convolution above.
Rational theorem5_expected(long n);

// Checks theorem5_lhs(n) against the expected value for every n <= max_n by
// divisor-sum brute force, and cross-checks the same coefficients through
// the series product scriptP * psi. A non-default wt_zero is a negative
// control and must fail at every triangular n.
Verdict verify_theorem5(long max_n, const Rational& wt_zero = Rational(1, 8));

// Counts of lattice points with x, y >= 1:
//   countA: 2x^2 + y^2 = 8n+1, y odd, 2 | x
//   countB:  x^2 + y^2 = 8n+1, y odd, 4 | x
struct LatticeCount {
    long n = 0;
    long countA = 0;
    long countB = 0;
};

LatticeCount enumerate_AB(long n);

// The two counts have the same parity except exactly when n = r(r+1)/2 with
// r = 1, 2 (mod 4).
Verdict verify_parity_corollary(long max_n);

}  // namespace qforms
