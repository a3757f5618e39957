#pragma once

#include "qforms/series.hpp"

#include <string>
#include <vector>

namespace qforms {

// --- divisor sums -----------------------------------------------------------

// sigma_s(n) = sum_{d|n} d^s; zero for n outside the positive integers.
Integer sigma_int(unsigned s, long n);
Rational sigma(unsigned s, long n);

// wt_s(n) = sum_{d|n} (-1)^(d-1) d^s, Glaisher's alternating divisor sum;
// zero for n outside the positive integers.
Integer wt_int(unsigned s, long n);
Rational wt(unsigned s, long n);

// Sieved tables of the above, indexed by n in 1..N (index 0 unused). They
// must agree with the trial-division functions; the per-value functions stay
// the reference.
std::vector<Integer> sigma_table(unsigned s, long n_max);
std::vector<Integer> wt_table(unsigned s, long n_max);

// --- level-1 Eisenstein series ----------------------------------------------

// P = 1 - 24 sum sigma(n) q^n, Q = 1 + 240 sum sigma_3(n) q^n,
// R = 1 - 504 sum sigma_5(n) q^n.
LaurentSeries series_P(long order);
LaurentSeries series_Q(long order);
LaurentSeries series_R(long order);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 2 (E_4 = Q,
// E_6 = R, and E_2 = P).
LaurentSeries eisenstein_level1(int k, long order);

// --- level-2 Eisenstein series (Gamma_0(2)) ----------------------------------

// scriptP = 1 + 8 sum (-1)^(n-1) n q^n/(1-q^n)
// e       = 1 + 24 sum n q^n/(1+q^n)
// scriptQ = 1 - 16 sum (-1)^(n-1) n^3 q^n/(1-q^n)
LaurentSeries series_scriptP(long order);
LaurentSeries series_e(long order);
LaurentSeries series_scriptQ(long order);

// e written over odd indices only: 1 + 24 sum (2n-1) q^(2n-1)/(1-q^(2n-1)).
LaurentSeries series_e_odd_form(long order);

// curlyE_k = 1 - (2k / ((1-2^k) B_k)) sum (-1)^(n-1) n^(k-1) q^n/(1-q^n) for
// even k. The defining prefactor is usually stated for k >= 4; at k = 2 it
// evaluates to -8 and reproduces scriptP, so k = 2 is accepted.
LaurentSeries eisenstein_level2(int k, long order);

// psi = sum_{n>=0} q^(n(n+1)/2), the theta series over triangular numbers.
LaurentSeries series_psi(long order);

// The same function as an eta-style product (q^2;q^2)_inf / (q;q^2)_inf.
LaurentSeries series_psi_product(long order);

// D = (e^2 - scriptQ)/64 = q + 8q^2 + 28q^3 + ..., the weight-4 form whose
// logarithmic derivative is scriptP.
LaurentSeries series_D(long order);

// j2 = e^2 / D = 1/q + 40 + 276q - ...; j2 - 40 is the hauptmodul. The
// result is exact on [-1, order).
LaurentSeries series_j2(long order);

// --- registry ----------------------------------------------------------------

// Builds a named series at the requested order. Names: "P", "Q", "R",
// "scriptP", "e", "scriptQ", "E1:k", "E2:k", "psi", "D", "j2", "Psi:r:s",
// "Phi:r:s". Unknown names throw std::invalid_argument.
LaurentSeries make_series_by_name(const std::string& name, long order);

std::vector<std::string> registry_names();

}  // namespace qforms
