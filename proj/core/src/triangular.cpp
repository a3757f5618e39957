#include "qforms/triangular.hpp"

#include "qforms/diffring.hpp"
#include "qforms/forms.hpp"
#include "qforms/numbers.hpp"

#include <stdexcept>

namespace qforms {

TriangularSeries t2k_series(unsigned k, long order) {
    if (k < 1) throw std::domain_error("t2k_series: k must be >= 1");
    if (order < 1) throw std::invalid_argument("t2k_series: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    for (long n = 0;; ++n) {
        long t = n * (n + 1) / 2;
        if (t >= order) break;
        c[static_cast<std::size_t>(t)] =
            Rational(int_pow(static_cast<unsigned long>(2 * n + 1), 2 * k));
    }
    return TriangularSeries{k, LaurentSeries(0, std::move(c))};
}

WeightedPoly g2k_poly(unsigned k) {
    if (k < 1) throw std::domain_error("g2k_poly: k must be >= 1");
    WeightedPoly g = WeightedPoly::gen_scriptP();
    for (unsigned i = 1; i < k; ++i)
        g = Rational(8) * ring_theta(g) + WeightedPoly::gen_scriptP() * g;
    return g;
}

Verdict verify_theorem4(unsigned k, long order, const LaurentSeries* psi_perturbation) {
    Verdict v;
    v.name = "T_" + std::to_string(2 * k) + " = g_" + std::to_string(2 * k) + " * psi";
    LaurentSeries psi = series_psi(order);
    if (psi_perturbation) psi = psi + *psi_perturbation;
    LaurentSeries lhs = t2k_series(k, order).series;
    LaurentSeries rhs = eval_poly(g2k_poly(k), order) * psi;
    auto diff = first_difference(lhs, rhs, 0, order);
    v.pass = !diff.has_value();
    v.first_difference = diff;
    if (diff) v.detail = "first differing exponent " + std::to_string(*diff);
    return v;
}

}  // namespace qforms
