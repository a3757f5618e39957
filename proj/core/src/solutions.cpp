#include "qforms/solutions.hpp"

#include "qforms/diffring.hpp"
#include "qforms/forms.hpp"
#include "qforms/numbers.hpp"

#include <sstream>
#include <stdexcept>

namespace qforms {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::shifted_up() const {
    if (coeffs_.empty()) return UniPoly();
    std::vector<Rational> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(Rational(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
    return UniPoly(std::move(out));
}

std::string UniPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || !a.is_one()) os << a.str();
        if (i != 0) {
            if (!a.is_one()) os << "*";
            os << "x";
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

Rational lambda_n(long n) {
    if (n < 1) throw std::domain_error("lambda_n: index must be >= 1");
    return Rational(-64 * (n + 1) * (n + 1), (2 * n + 1) * (2 * n + 3));
}

namespace {

UniPoly recurrence_poly(unsigned n, UniPoly p0, UniPoly p1) {
    if (n == 0) return p0;
    for (unsigned i = 1; i < n; ++i) {
        UniPoly next = p1.shifted_up() + lambda_n(static_cast<long>(i)) * p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

}  // namespace

UniPoly poly_A(unsigned n) {
    return recurrence_poly(n, UniPoly({Rational(1)}), UniPoly::x());
}

UniPoly poly_B(unsigned n) {
    return recurrence_poly(n, UniPoly(), UniPoly({Rational(1)}));
}

EDPoly EDPoly::monomial(const EDMonomial& m, const Rational& c) {
    EDPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Rational EDPoly::coefficient(const EDMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void EDPoly::add_term(const EDMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EDPoly operator+(const EDPoly& a, const EDPoly& b) {
    EDPoly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, c);
    return p;
}

EDPoly operator*(const EDPoly& a, const EDPoly& b) {
    EDPoly p;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            p.add_term(EDMonomial{ma.e + mb.e, ma.d + mb.d}, ca * cb);
    return p;
}

EDPoly operator*(const Rational& c, const EDPoly& p) {
    EDPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : p.terms()) r.add_term(m, c * coeff);
    return r;
}

std::string EDPoly::str() const {
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
        bool unit = a.is_one() && !(m.e == 0 && m.d == 0);
        if (!unit) os << a.str();
        bool need_star = !unit;
        auto emit = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (need_star) os << "*";
            os << name;
            if (exp != 1) os << "^" << exp;
            need_star = true;
        };
        emit("e", m.e);
        emit("D", m.d);
    }
    return os.str();
}

WeightedPoly ed_to_weighted(const EDPoly& p) {
    // D = (e^2 - scriptQ)/64
    const WeightedPoly d_sub = (pow(WeightedPoly::gen_e(), 2) -
                                WeightedPoly::gen_scriptQ()) /
                               Rational(64);
    WeightedPoly out;
    for (const auto& [m, c] : p.terms()) {
        WeightedPoly term = c * pow(WeightedPoly::gen_e(), static_cast<unsigned>(m.e));
        out += term * pow(d_sub, static_cast<unsigned>(m.d));
    }
    return out;
}

EDPoly weighted_to_ed(const WeightedPoly& p) {
    // scriptQ = e^2 - 64 D
    const EDPoly q_sub = EDPoly::monomial(EDMonomial{2, 0}, Rational(1)) +
                         EDPoly::monomial(EDMonomial{0, 1}, Rational(-64));
    EDPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.p != 0)
            throw std::domain_error("weighted_to_ed: polynomial involves scriptP");
        EDPoly term = c * EDPoly::monomial(EDMonomial{m.e, 0}, Rational(1));
        EDPoly acc = term;
        for (int i = 0; i < m.q; ++i) acc = acc * q_sub;
        out = out + acc;
    }
    return out;
}

namespace {

// D^(half_shift/2) X_n(e/sqrt(D)) as an (e, D) polynomial: pairs the
// x^j coefficient of X with D^((half_shift - j)/2). Any coefficient at a
// parity sqrt(D) could not cancel on is rejected.
EDPoly half_weight_expand(const UniPoly& x_poly, int half_shift) {
    EDPoly out;
    for (long j = 0; j <= x_poly.degree(); ++j) {
        Rational c = x_poly.coeff(j);
        if (c.is_zero()) continue;
        long rem = half_shift - j;
        if (rem < 0 || rem % 2 != 0)
            throw std::logic_error("half_weight_expand: sqrt(D) does not cancel");
        out = out + EDPoly::monomial(
                        EDMonomial{static_cast<int>(j), static_cast<int>(rem / 2)}, c);
    }
    return out;
}

void require_even_weight(int k, int minimum, const char* who) {
    if (k < minimum || k % 2 != 0)
        throw std::domain_error(std::string(who) + ": weight must be even and >= " +
                                std::to_string(minimum));
}

}  // namespace

EDPoly modular_solution_F_ed(int k) {
    require_even_weight(k, 2, "modular_solution_F");
    unsigned n = static_cast<unsigned>((k - 2) / 2);
    const EDPoly e_gen = EDPoly::monomial(EDMonomial{1, 0}, Rational(1));
    const EDPoly q_in_ed = EDPoly::monomial(EDMonomial{2, 0}, Rational(1)) +
                           EDPoly::monomial(EDMonomial{0, 1}, Rational(-64));
    EDPoly first = half_weight_expand(poly_A(n), static_cast<int>(n)) * e_gen;
    EDPoly out = Rational(2, 3) * first;
    if (n >= 1) {
        EDPoly second = half_weight_expand(poly_B(n), static_cast<int>(n) - 1) * q_in_ed;
        out = out + Rational(1, 3) * second;
    }
    return out;
}

WeightedPoly modular_solution_F(int k) {
    return ed_to_weighted(modular_solution_F_ed(k));
}

EDPoly hypergeometric_solution(int k) {
    require_even_weight(k, 4, "hypergeometric_solution");
    Rational a(-k, 4), b(-(k - 2), 4), c(-(k - 1), 2);
    EDPoly out;
    for (int i = 0; 4 * i <= k; ++i) {
        unsigned ui = static_cast<unsigned>(i);
        Rational coeff = pochhammer(a, ui) * pochhammer(b, ui) /
                         (pochhammer(c, ui) * Rational(factorial(ui)));
        coeff *= Rational(64).pow(i);
        out = out + EDPoly::monomial(EDMonomial{k / 2 - 2 * i, i}, coeff);
    }
    return out;
}

WeightedPoly hypergeometric_solution_weighted(int k) {
    return ed_to_weighted(hypergeometric_solution(k));
}

LaurentSeries ode_residual(const LaurentSeries& f, int k, long order) {
    if (k % 2 != 0) throw std::domain_error("ode_residual: weight must be even");
    LaurentSeries inner = serre_theta(f, k, order);
    LaurentSeries outer = serre_theta(inner, k + 2, order);
    LaurentSeries rhs = Rational(k * (k + 2), 16) *
                        (series_scriptQ(order) * truncate(f, order));
    return truncate(outer - rhs, order);
}

LaurentSeries ode_residual_raw(const LaurentSeries& f, int k, long order) {
    if (k % 2 != 0) throw std::domain_error("ode_residual_raw: weight must be even");
    if (f.order() < order)
        throw std::domain_error("ode_residual_raw: series only known to order " +
                                std::to_string(f.order()));
    LaurentSeries ft = truncate(f, order);
    long p_order = order + std::max(0L, -ft.valuation());
    LaurentSeries scriptP = series_scriptP(p_order);
    LaurentSeries fp = theta(ft);
    LaurentSeries res = theta(fp) - Rational(k + 1, 2) * (scriptP * fp) +
                        Rational(k * (k + 1), 4) * (theta(scriptP) * ft);
    return truncate(res, order);
}

}  // namespace qforms
