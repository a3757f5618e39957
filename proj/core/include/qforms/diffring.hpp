#pragma once

#include "qforms/series.hpp"
#include "qforms/weighted_poly.hpp"

namespace qforms {

// The derivation q d/dq on the ring, determined by
//   theta scriptP = (scriptP^2 - scriptQ)/4
//   theta e       = (e scriptP - scriptQ)/2
//   theta scriptQ = scriptP scriptQ - e scriptQ
// and extended by linearity and the Leibniz rule.
WeightedPoly ring_theta(const WeightedPoly& p);

// Substitutes the q-expansions of scriptP, e, scriptQ and expands.
LaurentSeries eval_poly(const WeightedPoly& p, long order);

// The weight-raising operator theta_k(f) = theta(f) - (k/4) scriptP f.
// Requires even k and f known to `order`; the weight is the caller's claim,
// no bookkeeping is done here.
LaurentSeries serre_theta(const LaurentSeries& f, int k, long order);

// Degree-1 Rankin-Cohen bracket [f, g] = k f theta(g) - l theta(f) g for
// weights k and l; antisymmetric under swapping (f, k) and (g, l).
LaurentSeries rankin_cohen(const LaurentSeries& f, int k,
                           const LaurentSeries& g, int l);

// The same bracket written through the weight-raising operator,
// k f theta_l(g) - l theta_k(f) g; agrees with rankin_cohen identically.
LaurentSeries rankin_cohen_theta_form(const LaurentSeries& f, int k,
                                      const LaurentSeries& g, int l, long order);

}  // namespace qforms
