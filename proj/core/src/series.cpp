#include "qforms/series.hpp"

#include "qforms/numbers.hpp"

#include <algorithm>
#include <sstream>

namespace qforms {

namespace {
const Rational kZero(0);
}

LaurentSeries::LaurentSeries(long valuation, std::vector<Rational> coeffs)
    : valuation_(valuation),
      order_(valuation + static_cast<long>(coeffs.size())),
      coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentSeries LaurentSeries::zero(long order) {
    LaurentSeries s;
    s.valuation_ = order;
    s.order_ = order;
    return s;
}

LaurentSeries LaurentSeries::constant(const Rational& c, long order) {
    return monomial(c, 0, order);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long exponent, long order) {
    if (c.is_zero()) return zero(order);
    if (exponent >= order)
        throw std::invalid_argument("LaurentSeries::monomial: exponent beyond order");
    LaurentSeries s;
    s.valuation_ = exponent;
    s.order_ = order;
    s.coeffs_.assign(static_cast<std::size_t>(order - exponent), kZero);
    s.coeffs_[0] = c;
    return s;
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        valuation_ += static_cast<long>(lead);
    }
}

const Rational& LaurentSeries::raw(long j) const {
    if (coeffs_.empty() || j < valuation_ || j >= order_) return kZero;
    return coeffs_[static_cast<std::size_t>(j - valuation_)];
}

const Rational& LaurentSeries::coeff(long j) const {
    if (j >= order_)
        throw std::out_of_range("LaurentSeries::coeff: exponent " + std::to_string(j) +
                                " is at or beyond the truncation order " +
                                std::to_string(order_));
    return raw(j);
}

LaurentSeries LaurentSeries::as_known_to(long order) const {
    if (order < order_)
        throw std::invalid_argument("LaurentSeries::as_known_to: order would shrink");
    LaurentSeries s(*this);
    if (!s.coeffs_.empty())
        s.coeffs_.resize(static_cast<std::size_t>(order - s.valuation_), kZero);
    s.order_ = order;
    if (s.coeffs_.empty()) s.valuation_ = order;
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
    long no = std::min(f.order_, g.order_);
    long nv = std::min(f.valuation(), g.valuation());
    nv = std::min(nv, no);
    LaurentSeries s;
    s.valuation_ = nv;
    s.order_ = no;
    s.coeffs_.reserve(static_cast<std::size_t>(no - nv));
    for (long j = nv; j < no; ++j) s.coeffs_.push_back(f.raw(j) + g.raw(j));
    s.normalize();
    return s;
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
    return f + (-g);
}

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    // valuation() of a zero series reports its order, which is exactly the
    // lowest exponent at which unknown coefficients could start.
    long no = std::min(f.order_ + g.valuation(), g.order_ + f.valuation());
    if (f.coeffs_.empty() || g.coeffs_.empty()) return LaurentSeries::zero(no);
    long nv = f.valuation_ + g.valuation_;
    if (no <= nv) return LaurentSeries::zero(no);
    LaurentSeries s;
    s.valuation_ = nv;
    s.order_ = no;
    s.coeffs_.assign(static_cast<std::size_t>(no - nv), kZero);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        long ei = f.valuation_ + static_cast<long>(i);
        long jmax = no - ei - g.valuation_;  // number of usable g coefficients
        long glen = static_cast<long>(g.coeffs_.size());
        long lim = std::min(jmax, glen);
        for (long j = 0; j < lim; ++j) {
            if (g.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
            s.coeffs_[static_cast<std::size_t>(ei + g.valuation_ + j - nv)] +=
                f.coeffs_[i] * g.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    s.normalize();
    return s;
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& f) {
    if (c.is_zero()) return LaurentSeries::zero(f.order_);
    LaurentSeries s(f);
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

LaurentSeries operator*(const LaurentSeries& f, const Rational& c) { return c * f; }

LaurentSeries operator/(const LaurentSeries& f, const Rational& c) {
    return c.inverse() * f;
}

LaurentSeries truncate(const LaurentSeries& f, long order) {
    long no = std::min(order, f.order_);
    LaurentSeries s;
    s.valuation_ = std::min(f.valuation(), no);
    s.order_ = no;
    if (!f.coeffs_.empty() && f.valuation_ < no) {
        s.valuation_ = f.valuation_;
        s.coeffs_.assign(f.coeffs_.begin(),
                         f.coeffs_.begin() + static_cast<long>(no - f.valuation_));
    } else {
        s.valuation_ = no;
    }
    s.normalize();
    return s;
}

LaurentSeries invert(const LaurentSeries& f, long order) {
    if (f.coeffs_.empty()) throw std::domain_error("invert: zero series");
    long v = f.valuation_;
    long knowable = f.order_ - 2 * v;
    long no = std::min(order, knowable);
    long nv = -v;
    if (no <= nv) return LaurentSeries::zero(no);
    std::size_t n = static_cast<std::size_t>(no - nv);
    const Rational& lead = f.coeffs_[0];
    Rational lead_inv = lead.inverse();
    std::vector<Rational> g(n, kZero);
    g[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc(0);
        std::size_t jmax = std::min(k, f.coeffs_.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            if (f.coeffs_[j].is_zero() || g[k - j].is_zero()) continue;
            acc += f.coeffs_[j] * g[k - j];
        }
        g[k] = -(lead_inv * acc);
    }
    return LaurentSeries(nv, std::move(g));
}

LaurentSeries theta(const LaurentSeries& f) {
    LaurentSeries s(f);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
        s.coeffs_[i] *= Rational(s.valuation_ + static_cast<long>(i));
    s.normalize();
    return s;
}

LaurentSeries pow(const LaurentSeries& f, unsigned n) {
    if (n == 0) return LaurentSeries::constant(Rational(1), std::max(f.order(), 1L));
    LaurentSeries acc = f;
    for (unsigned i = 1; i < n; ++i) acc = acc * f;
    return acc;
}

bool equal_on_range(const LaurentSeries& f, const LaurentSeries& g, long lo, long hi) {
    return !first_difference(f, g, lo, hi).has_value();
}

std::optional<long> first_difference(const LaurentSeries& f, const LaurentSeries& g,
                                     long lo, long hi) {
    if (lo >= hi)
        throw std::invalid_argument("first_difference: empty exponent range");
    if (hi > f.order() || hi > g.order())
        throw std::domain_error(
            "first_difference: range [" + std::to_string(lo) + ", " + std::to_string(hi) +
            ") reaches beyond the known coefficients (orders " +
            std::to_string(f.order()) + ", " + std::to_string(g.order()) + ")");
    for (long j = lo; j < hi; ++j)
        if (f.coeff(j) != g.coeff(j)) return j;
    return std::nullopt;
}

std::optional<long> first_nonzero(const LaurentSeries& f, long lo, long hi) {
    return first_difference(f, LaurentSeries::zero(hi), lo, hi);
}

std::string LaurentSeries::str() const {
    if (coeffs_.empty()) return "O(q^" + std::to_string(order_) + ")";
    std::ostringstream os;
    bool first = true;
    for (long j = valuation_; j < order_; ++j) {
        const Rational& c = raw(j);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (j == 0 || !a.is_one()) os << a.str();
        if (j != 0) {
            if (!a.is_one()) os << "*";
            os << "q";
            if (j != 1) os << "^" << j;
        }
    }
    os << " + O(q^" << order_ << ")";
    return os.str();
}

LaurentSeries lambert(unsigned s, bool alternating, long order) {
    if (order < 1) throw std::invalid_argument("lambert: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order), kZero);
    for (long n = 1; n < order; ++n) {
        Integer ns = int_pow(static_cast<unsigned long>(n), s);
        bool negative = alternating && n % 2 == 0;
        Rational term = negative ? Rational(-ns) : Rational(ns);
        for (long e = n; e < order; e += n) c[static_cast<std::size_t>(e)] += term;
    }
    return LaurentSeries(0, std::move(c));
}

LaurentSeries lambert_plus(unsigned s, long order) {
    if (order < 1) throw std::invalid_argument("lambert_plus: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order), kZero);
    for (long n = 1; n < order; ++n) {
        Integer ns = int_pow(static_cast<unsigned long>(n), s);
        Rational plus(ns), minus(-ns);
        long m = 1;
        for (long e = n; e < order; e += n, ++m)
            c[static_cast<std::size_t>(e)] += (m % 2 == 1) ? plus : minus;
    }
    return LaurentSeries(0, std::move(c));
}

namespace {

LaurentSeries double_sum(unsigned r, unsigned s, bool alternating, long order) {
    if (order < 1) throw std::invalid_argument("double_sum: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order), kZero);
    for (long n = 1; n < order; ++n) {
        Integer ns = int_pow(static_cast<unsigned long>(n), s);
        if (alternating && n % 2 == 0) ns = -ns;
        for (long m = 1; m * n < order; ++m) {
            Integer term = ns * int_pow(static_cast<unsigned long>(m), r);
            c[static_cast<std::size_t>(m * n)] += Rational(term);
        }
    }
    return LaurentSeries(0, std::move(c));
}

}  // namespace

LaurentSeries psi_double_sum(unsigned r, unsigned s, long order) {
    return double_sum(r, s, true, order);
}

LaurentSeries phi_double_sum(unsigned r, unsigned s, long order) {
    return double_sum(r, s, false, order);
}

LaurentSeries product_expand(const std::vector<ProductFactor>& factors, long order) {
    if (order < 1) throw std::invalid_argument("product_expand: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order), kZero);
    c[0] = Rational(1);
    for (const auto& factor : factors) {
        if (factor.first <= 0 || factor.step <= 0)
            throw std::domain_error("product_expand: exponent progression must be positive");
        if (factor.exponent != 1 && factor.exponent != -1)
            throw std::domain_error("product_expand: factor exponent must be +1 or -1");
        for (long t = factor.first; t < order; t += factor.step) {
            if (factor.exponent == 1) {
                for (long j = order - 1; j >= t; --j)
                    c[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j - t)];
            } else {
                for (long j = t; j < order; ++j)
                    c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - t)];
            }
        }
    }
    return LaurentSeries(0, std::move(c));
}

}  // namespace qforms
