#pragma once

#include "qforms/series.hpp"
#include "qforms/weighted_poly.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qforms {

// Dense univariate polynomial over Rational; coefficient index = degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly x();

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(long i) const;

    UniPoly shifted_up() const;  // multiplication by x

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

// Recurrence coefficient lambda_n = -64 (n+1)^2 / ((2n+1)(2n+3)), n >= 1.
Rational lambda_n(long n);

// A_0 = 1, A_1 = x, A_{n+1} = x A_n + lambda_n A_{n-1}; even/odd with n.
UniPoly poly_A(unsigned n);
// B_0 = 0, B_1 = 1, same recurrence; opposite parity.
UniPoly poly_B(unsigned n);

// Monomial e^e D^d in the ring generated by e (weight 2) and D (weight 4).
struct EDMonomial {
    int e = 0;
    int d = 0;
    int weight() const { return 2 * e + 4 * d; }
    auto operator<=>(const EDMonomial&) const = default;
};

// Polynomial in e and D, the presentation basis of the hypergeometric
// solutions; scriptQ = e^2 - 64 D bridges to WeightedPoly.
class EDPoly {
public:
    using TermMap = std::map<EDMonomial, Rational>;

    EDPoly() = default;
    static EDPoly monomial(const EDMonomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const EDMonomial& m) const;

    friend EDPoly operator+(const EDPoly& a, const EDPoly& b);
    friend EDPoly operator*(const EDPoly& a, const EDPoly& b);
    friend EDPoly operator*(const Rational& c, const EDPoly& p);
    friend bool operator==(const EDPoly& a, const EDPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    TermMap terms_;
    void add_term(const EDMonomial& m, const Rational& c);
};

// Substitutes D = (e^2 - scriptQ)/64.
WeightedPoly ed_to_weighted(const EDPoly& p);

// Substitutes scriptQ = e^2 - 64 D; requires a scriptP-free polynomial.
EDPoly weighted_to_ed(const WeightedPoly& p);

// Weight-k solution of the level-2 ODE built from the A_n/B_n recurrences,
// emitted in the (e, scriptQ) basis:
//   F_k = D^(n/2) A_n(e/sqrt(D)) (2e/3) + D^((n-1)/2) B_n(e/sqrt(D)) (scriptQ/3)
// with k = 2n+2. The square root never materializes; the parity of A_n and
// B_n pairs every x-power with an integral power of D, and construction
// rejects any parity leakage.
WeightedPoly modular_solution_F(int k);

// The same form in the (e, D) basis.
EDPoly modular_solution_F_ed(int k);

// Terminating hypergeometric solution for even k >= 4, in the (e, D) basis:
//   sum_{0 <= i <= k/4} (-k/4)_i (-(k-2)/4)_i / ((-(k-1)/2)_i i!) 64^i D^i e^(k/2-2i)
EDPoly hypergeometric_solution(int k);
WeightedPoly hypergeometric_solution_weighted(int k);

// Residual of the weight-k ODE in its first-order-operator form,
// theta_{k+2}(theta_k(f)) - (k(k+2)/16) scriptQ f; the zero series exactly
// when f solves the equation to the checked order.
LaurentSeries ode_residual(const LaurentSeries& f, int k, long order);

// Residual of the raw second-order form,
// theta(theta(f)) - ((k+1)/2) scriptP theta(f) + (k(k+1)/4) theta(scriptP) f.
// Agrees with ode_residual identically.
LaurentSeries ode_residual_raw(const LaurentSeries& f, int k, long order);

}  // namespace qforms
