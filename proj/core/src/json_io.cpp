#include "qforms/json_io.hpp"

namespace qforms {

namespace {

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

}  // namespace

Json series_to_json(const LaurentSeries& f) {
    Json j;
    j["valuation"] = f.valuation();
    j["order"] = f.order();
    Json coeffs = Json::array();
    for (long e = f.valuation(); e < f.order(); ++e) coeffs.push_back(f.coeff(e).str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

LaurentSeries series_from_json(const Json& j) {
    long valuation = j.at("valuation").get<long>();
    long order = j.at("order").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (valuation + static_cast<long>(coeffs.size()) != order)
        throw std::invalid_argument("series_from_json: coeffs length disagrees with order");
    return LaurentSeries(valuation, std::move(coeffs));
}

Json poly_to_json(const WeightedPoly& p) {
    Json j = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["P"] = m.p;
        term["e"] = m.e;
        term["Q"] = m.q;
        term["c"] = c.str();
        j.push_back(std::move(term));
    }
    return j;
}

WeightedPoly poly_from_json(const Json& j) {
    WeightedPoly p;
    for (const auto& term : j) {
        Monomial m{term.at("P").get<int>(), term.at("e").get<int>(),
                   term.at("Q").get<int>()};
        p += WeightedPoly::monomial(m, Rational::parse(term.at("c").get<std::string>()));
    }
    return p;
}

Json ed_poly_to_json(const EDPoly& p) {
    Json j = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["e"] = m.e;
        term["D"] = m.d;
        term["c"] = c.str();
        j.push_back(std::move(term));
    }
    return j;
}

Json relation_to_json(const Relation& r) {
    Json j;
    j["k"] = r.k;
    Json lhs;
    lhs["c0"] = integer_to_json(r.lhs_constant);
    lhs["c1"] = integer_to_json(r.lhs_psi_coeff);
    lhs["s"] = r.k - 1;
    j["lhs"] = std::move(lhs);
    j["rhs"] = poly_to_json(r.rhs);
    j["verified_to"] = r.verified_to;
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["name"] = v.name;
    j["pass"] = v.pass;
    if (v.first_difference) j["first_difference"] = *v.first_difference;
    else j["first_difference"] = nullptr;
    j["detail"] = v.detail;
    return j;
}

}  // namespace qforms
