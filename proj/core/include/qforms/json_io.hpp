#pragma once

#include "qforms/discovery.hpp"
#include "qforms/series.hpp"
#include "qforms/solutions.hpp"
#include "qforms/verdict.hpp"
#include "qforms/weighted_poly.hpp"

#include <nlohmann/json.hpp>

namespace qforms {

using Json = nlohmann::ordered_json;

// {"valuation": v, "order": o, "coeffs": ["p/q", ...]} with coeffs[0] at
// exponent = valuation. Rationals are decimal-free strings, never floats.
Json series_to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const Json& j);

// List of {"P": l, "e": m, "Q": n, "c": "p/q"}, sorted by the canonical
// monomial order.
Json poly_to_json(const WeightedPoly& p);
WeightedPoly poly_from_json(const Json& j);

// List of {"e": m, "D": d, "c": "p/q"} for the (e, D) basis.
Json ed_poly_to_json(const EDPoly& p);

// {"k": k, "lhs": {"c0": ..., "c1": ..., "s": k-1}, "rhs": ...,
//  "verified_to": N}; c0 and c1 are JSON numbers when they fit in 64 bits,
// decimal strings otherwise.
Json relation_to_json(const Relation& r);

Json verdict_to_json(const Verdict& v);

}  // namespace qforms
