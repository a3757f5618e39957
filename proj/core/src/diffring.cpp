#include "qforms/diffring.hpp"

#include "qforms/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qforms {

namespace {

const WeightedPoly& theta_scriptP() {
    // (scriptP^2 - scriptQ)/4
    static const WeightedPoly d = (pow(WeightedPoly::gen_scriptP(), 2) -
                                   WeightedPoly::gen_scriptQ()) /
                                  Rational(4);
    return d;
}

const WeightedPoly& theta_e() {
    // (e scriptP - scriptQ)/2
    static const WeightedPoly d = (WeightedPoly::gen_e() * WeightedPoly::gen_scriptP() -
                                   WeightedPoly::gen_scriptQ()) /
                                  Rational(2);
    return d;
}

const WeightedPoly& theta_scriptQ() {
    // scriptP scriptQ - e scriptQ
    static const WeightedPoly d = WeightedPoly::gen_scriptP() * WeightedPoly::gen_scriptQ() -
                                  WeightedPoly::gen_e() * WeightedPoly::gen_scriptQ();
    return d;
}

}  // namespace

WeightedPoly ring_theta(const WeightedPoly& p) {
    WeightedPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.p > 0) {
            WeightedPoly rest = WeightedPoly::monomial(Monomial{m.p - 1, m.e, m.q},
                                                       c * Rational(m.p));
            out += rest * theta_scriptP();
        }
        if (m.e > 0) {
            WeightedPoly rest = WeightedPoly::monomial(Monomial{m.p, m.e - 1, m.q},
                                                       c * Rational(m.e));
            out += rest * theta_e();
        }
        if (m.q > 0) {
            WeightedPoly rest = WeightedPoly::monomial(Monomial{m.p, m.e, m.q - 1},
                                                       c * Rational(m.q));
            out += rest * theta_scriptQ();
        }
    }
    return out;
}

LaurentSeries eval_poly(const WeightedPoly& p, long order) {
    if (order < 1) throw std::invalid_argument("eval_poly: order must be >= 1");
    if (p.is_zero()) return LaurentSeries::zero(order);
    int max_p = 0, max_e = 0, max_q = 0;
    for (const auto& [m, c] : p.terms()) {
        max_p = std::max(max_p, m.p);
        max_e = std::max(max_e, m.e);
        max_q = std::max(max_q, m.q);
    }
    auto powers = [order](const LaurentSeries& base, int up_to) {
        std::vector<LaurentSeries> v;
        v.reserve(static_cast<std::size_t>(up_to) + 1);
        v.push_back(LaurentSeries::constant(Rational(1), order));
        for (int i = 1; i <= up_to; ++i) v.push_back(v.back() * base);
        return v;
    };
    std::vector<LaurentSeries> pp = powers(series_scriptP(order), max_p);
    std::vector<LaurentSeries> pe = powers(series_e(order), max_e);
    std::vector<LaurentSeries> pq = powers(series_scriptQ(order), max_q);
    LaurentSeries acc = LaurentSeries::zero(order);
    for (const auto& [m, c] : p.terms())
        acc = acc + c * (pp[static_cast<std::size_t>(m.p)] *
                         pe[static_cast<std::size_t>(m.e)] *
                         pq[static_cast<std::size_t>(m.q)]);
    return acc;
}

LaurentSeries serre_theta(const LaurentSeries& f, int k, long order) {
    if (k % 2 != 0) throw std::domain_error("serre_theta: weight must be even");
    if (f.order() < order)
        throw std::domain_error("serre_theta: series only known to order " +
                                std::to_string(f.order()));
    LaurentSeries ft = truncate(f, order);
    if (ft.is_zero()) return LaurentSeries::zero(order);
    long p_order = order + std::max(0L, -ft.valuation());
    LaurentSeries scriptP = series_scriptP(p_order);
    LaurentSeries res = theta(ft) - Rational(k, 4) * (scriptP * ft);
    return truncate(res, order);
}

LaurentSeries rankin_cohen(const LaurentSeries& f, int k,
                           const LaurentSeries& g, int l) {
    if (k % 2 != 0 || l % 2 != 0)
        throw std::domain_error("rankin_cohen: weights must be even");
    return Rational(k) * (f * theta(g)) - Rational(l) * (theta(f) * g);
}

LaurentSeries rankin_cohen_theta_form(const LaurentSeries& f, int k,
                                      const LaurentSeries& g, int l, long order) {
    if (k % 2 != 0 || l % 2 != 0)
        throw std::domain_error("rankin_cohen: weights must be even");
    return truncate(Rational(k) * (truncate(f, order) * serre_theta(g, l, order)) -
                        Rational(l) * (serre_theta(f, k, order) * truncate(g, order)),
                    order);
}

}  // namespace qforms
