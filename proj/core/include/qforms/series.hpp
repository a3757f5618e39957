#pragma once

#include "qforms/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qforms {

/*
 * Truncated formal Laurent series over Rational.
 *
 * A series stores exact coefficients for every exponent j with
 * valuation() <= j < order(); exponents below the valuation are known to be
 * zero, exponents at or above the order are unknown. Every operation
 * propagates the tightest truncation bound that keeps the stored
 * coefficients exact; nothing ever extends knowledge silently.
 *
 * The zero series is an empty coefficient list plus a declared order;
 * its valuation() reports that order. Coefficient reads at or beyond the
 * order throw, they never return a default.
 */
class LaurentSeries {
public:
    LaurentSeries() : valuation_(0), order_(0) {}

    // Coefficients start at exponent `valuation`; order = valuation + #coeffs.
    LaurentSeries(long valuation, std::vector<Rational> coeffs);

    static LaurentSeries zero(long order);
    static LaurentSeries constant(const Rational& c, long order);
    static LaurentSeries monomial(const Rational& c, long exponent, long order);

    long order() const { return order_; }
    // Lowest exponent with a nonzero stored coefficient; equals order() for
    // the zero series.
    long valuation() const { return coeffs_.empty() ? order_ : valuation_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Exact coefficient of q^j; throws for j >= order().
    const Rational& coeff(long j) const;

    // Declares that every coefficient below `order` beyond those stored is
    // zero. This is a knowledge assertion for constructing exact
    // polynomials; requires order >= current order.
    LaurentSeries as_known_to(long order) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator*(const Rational& c, const LaurentSeries& f);
    friend LaurentSeries operator*(const LaurentSeries& f, const Rational& c);
    friend LaurentSeries operator/(const LaurentSeries& f, const Rational& c);

    std::string str() const;

private:
    long valuation_;
    long order_;
    std::vector<Rational> coeffs_;  // dense over [valuation_, order_)

    // 0 outside the stored range, no knowledge check
    const Rational& raw(long j) const;
    void normalize();

    friend LaurentSeries truncate(const LaurentSeries& f, long order);
    friend LaurentSeries invert(const LaurentSeries& f, long order);
    friend LaurentSeries theta(const LaurentSeries& f);
};

// f restricted to knowledge below min(order, f.order()).
LaurentSeries truncate(const LaurentSeries& f, long order);

// Multiplicative inverse, exact up to min(order, f.order() - 2 f.valuation()).
LaurentSeries invert(const LaurentSeries& f, long order);

// The operator q d/dq: coefficient c_j goes to j c_j. Order is preserved.
LaurentSeries theta(const LaurentSeries& f);

LaurentSeries pow(const LaurentSeries& f, unsigned n);

// Coefficient-wise equality of f and g on exponents lo <= j < hi. Throws if
// the range is empty or reaches beyond either series' known range.
bool equal_on_range(const LaurentSeries& f, const LaurentSeries& g, long lo, long hi);

// Smallest exponent in [lo, hi) where f and g differ, if any.
std::optional<long> first_difference(const LaurentSeries& f, const LaurentSeries& g,
                                     long lo, long hi);

std::optional<long> first_nonzero(const LaurentSeries& f, long lo, long hi);

// --- expanders ------------------------------------------------------------

// sum_{n>=1} eps(n) n^s q^n / (1 - q^n) with eps(n) = (-1)^(n-1) when
// alternating, else 1. Coefficient of q^N is the divisor sum
// sum_{d|N} eps(d) d^s.
LaurentSeries lambert(unsigned s, bool alternating, long order);

// sum_{n>=1} n^s q^n / (1 + q^n); the inner signs are (-1)^(m-1) on q^(nm).
LaurentSeries lambert_plus(unsigned s, long order);

// sum_{m,n>=1} (-1)^(n-1) m^r n^s q^(mn)
LaurentSeries psi_double_sum(unsigned r, unsigned s, long order);

// sum_{m,n>=1} m^r n^s q^(mn)
LaurentSeries phi_double_sum(unsigned r, unsigned s, long order);

// One factor prod_{j>=0} (1 - q^(first + j*step))^exponent with
// exponent = +1 (multiply) or -1 (divide).
struct ProductFactor {
    long first = 1;
    long step = 1;
    int exponent = 1;
};

// Expands a product of such factors by sequential polynomial
// multiplication/division. The empty product is 1.
LaurentSeries product_expand(const std::vector<ProductFactor>& factors, long order);

}  // namespace qforms
