#include "qforms/weighted_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qforms {

WeightedPoly WeightedPoly::constant(const Rational& c) {
    return monomial(Monomial{0, 0, 0}, c);
}

WeightedPoly WeightedPoly::monomial(const Monomial& m, const Rational& c) {
    WeightedPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

WeightedPoly WeightedPoly::gen_scriptP() { return monomial(Monomial{1, 0, 0}, Rational(1)); }
WeightedPoly WeightedPoly::gen_e() { return monomial(Monomial{0, 1, 0}, Rational(1)); }
WeightedPoly WeightedPoly::gen_scriptQ() { return monomial(Monomial{0, 0, 1}, Rational(1)); }

Rational WeightedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> WeightedPoly::homogeneous_weight() const {
    if (terms_.empty()) return 0;
    int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return std::nullopt;
    return w;
}

void WeightedPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeightedPoly WeightedPoly::operator-() const {
    WeightedPoly p(*this);
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeightedPoly& WeightedPoly::operator-=(const WeightedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
    WeightedPoly p;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            p.add_term(Monomial{ma.p + mb.p, ma.e + mb.e, ma.q + mb.q}, ca * cb);
    return p;
}

WeightedPoly operator*(const Rational& c, const WeightedPoly& p) {
    WeightedPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : p.terms()) r.terms_.emplace(m, c * coeff);
    return r;
}

WeightedPoly pow(const WeightedPoly& p, unsigned n) {
    WeightedPoly acc = WeightedPoly::constant(Rational(1));
    for (unsigned i = 0; i < n; ++i) acc = acc * p;
    return acc;
}

std::string WeightedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one() && !(m.p == 0 && m.e == 0 && m.q == 0);
        if (!unit) os << a.str();
        bool need_star = !unit;
        auto emit = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (need_star) os << "*";
            os << name;
            if (exp != 1) os << "^" << exp;
            need_star = true;
        };
        emit("P", m.p);
        emit("e", m.e);
        emit("Q", m.q);
    }
    return os.str();
}

GradedForm::GradedForm(WeightedPoly poly, int weight)
    : poly_(std::move(poly)), weight_(weight) {
    for (const auto& [m, c] : poly_.terms())
        if (m.weight() != weight)
            throw std::domain_error("GradedForm: term of weight " +
                                    std::to_string(m.weight()) +
                                    " in a form declared weight " + std::to_string(weight));
}

}  // namespace qforms
