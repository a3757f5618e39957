#pragma once

#include "qforms/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace qforms {

// Exponent triple of a monomial scriptP^p e^e scriptQ^q. The generators
// carry weights 2, 2 and 4.
struct Monomial {
    int p = 0;
    int e = 0;
    int q = 0;

    int weight() const { return 2 * p + 2 * e + 4 * q; }
    auto operator<=>(const Monomial&) const = default;
};

/*
 * Exact polynomial in the three generators scriptP, e, scriptQ. The
 * generators are treated as algebraically independent; no relation is
 * imposed below the evaluation map into q-series. Zero coefficients are
 * never stored, and the term map is ordered lexicographically in
 * (p, e, q), which fixes the canonical printing and serialization order.
 */
class WeightedPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    WeightedPoly() = default;

    static WeightedPoly constant(const Rational& c);
    static WeightedPoly monomial(const Monomial& m, const Rational& c);
    static WeightedPoly gen_scriptP();
    static WeightedPoly gen_e();
    static WeightedPoly gen_scriptQ();

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    // The common weight of all terms if the polynomial is homogeneous
    // (weight 0 for the zero polynomial), otherwise nullopt.
    std::optional<int> homogeneous_weight() const;

    WeightedPoly operator-() const;
    WeightedPoly& operator+=(const WeightedPoly& o);
    WeightedPoly& operator-=(const WeightedPoly& o);
    friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { return a += b; }
    friend WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b) { return a -= b; }
    friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
    friend WeightedPoly operator*(const Rational& c, const WeightedPoly& p);
    friend WeightedPoly operator*(const WeightedPoly& p, const Rational& c) { return c * p; }
    friend WeightedPoly operator/(const WeightedPoly& p, const Rational& c) {
        return c.inverse() * p;
    }

    friend bool operator==(const WeightedPoly& a, const WeightedPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    TermMap terms_;

    void add_term(const Monomial& m, const Rational& c);
    friend WeightedPoly ring_theta(const WeightedPoly& p);
};

WeightedPoly pow(const WeightedPoly& p, unsigned n);

// A homogeneous polynomial together with its weight; construction rejects
// mixed-weight input.
class GradedForm {
public:
    GradedForm(WeightedPoly poly, int weight);

    const WeightedPoly& poly() const { return poly_; }
    int weight() const { return weight_; }

private:
    WeightedPoly poly_;
    int weight_;
};

}  // namespace qforms
