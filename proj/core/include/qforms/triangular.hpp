#pragma once

#include "qforms/series.hpp"
#include "qforms/verdict.hpp"
#include "qforms/weighted_poly.hpp"

namespace qforms {

// T_{2k} = 1 + sum_{n>=1} (2n+1)^(2k) q^(n(n+1)/2): the coefficient at a
// triangular exponent n(n+1)/2 is (2n+1)^(2k), all others vanish.
struct TriangularSeries {
    unsigned k = 0;
    LaurentSeries series;
};

TriangularSeries t2k_series(unsigned k, long order);

// g_2 = scriptP and g_{2k+2} = 8 theta(g_{2k}) + scriptP g_{2k}; the
// weight-2k polynomial with T_{2k} = g_{2k} psi. Generated by the recursion
// only, there is no closed form for the coefficients.
WeightedPoly g2k_poly(unsigned k);

// Checks T_{2k} = g_{2k}(scriptP, e, scriptQ) psi exactly below `order`.
// `psi_perturbation` is added to psi first; nonzero values are negative
// controls and must make the check fail.
Verdict verify_theorem4(unsigned k, long order,
                        const LaurentSeries* psi_perturbation = nullptr);

}  // namespace qforms
