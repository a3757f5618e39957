#include "qforms/forms.hpp"

#include "qforms/numbers.hpp"

#include <stdexcept>

namespace qforms {

Integer sigma_int(unsigned s, long n) {
    if (n <= 0) return 0;
    Integer acc = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        acc += int_pow(static_cast<unsigned long>(d), s);
        long e = n / d;
        if (e != d) acc += int_pow(static_cast<unsigned long>(e), s);
    }
    return acc;
}

Rational sigma(unsigned s, long n) { return Rational(sigma_int(s, n)); }

Integer wt_int(unsigned s, long n) {
    if (n <= 0) return 0;
    Integer acc = 0;
    auto add = [&](long d) {
        Integer t = int_pow(static_cast<unsigned long>(d), s);
        if (d % 2 == 0) acc -= t; else acc += t;
    };
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        add(d);
        long e = n / d;
        if (e != d) add(e);
    }
    return acc;
}

Rational wt(unsigned s, long n) { return Rational(wt_int(s, n)); }

std::vector<Integer> sigma_table(unsigned s, long n_max) {
    std::vector<Integer> v(static_cast<std::size_t>(n_max) + 1, Integer(0));
    for (long d = 1; d <= n_max; ++d) {
        Integer dp = int_pow(static_cast<unsigned long>(d), s);
        for (long m = d; m <= n_max; m += d) v[static_cast<std::size_t>(m)] += dp;
    }
    return v;
}

std::vector<Integer> wt_table(unsigned s, long n_max) {
    std::vector<Integer> v(static_cast<std::size_t>(n_max) + 1, Integer(0));
    for (long d = 1; d <= n_max; ++d) {
        Integer dp = int_pow(static_cast<unsigned long>(d), s);
        if (d % 2 == 0) dp = -dp;
        for (long m = d; m <= n_max; m += d) v[static_cast<std::size_t>(m)] += dp;
    }
    return v;
}

namespace {

LaurentSeries one_plus(const Rational& scale, const LaurentSeries& tail, long order) {
    return LaurentSeries::constant(Rational(1), order) + scale * tail;
}

}  // namespace

LaurentSeries series_P(long order) {
    return one_plus(Rational(-24), lambert(1, false, order), order);
}

LaurentSeries series_Q(long order) {
    return one_plus(Rational(240), lambert(3, false, order), order);
}

LaurentSeries series_R(long order) {
    return one_plus(Rational(-504), lambert(5, false, order), order);
}

LaurentSeries eisenstein_level1(int k, long order) {
    if (k < 2 || k % 2 != 0)
        throw std::domain_error("eisenstein_level1: weight must be even and >= 2");
    Rational prefactor = Rational(2 * k) / bernoulli(k);
    return one_plus(-prefactor, lambert(static_cast<unsigned>(k - 1), false, order), order);
}

LaurentSeries series_scriptP(long order) {
    return one_plus(Rational(8), lambert(1, true, order), order);
}

LaurentSeries series_e(long order) {
    return one_plus(Rational(24), lambert_plus(1, order), order);
}

LaurentSeries series_scriptQ(long order) {
    return one_plus(Rational(-16), lambert(3, true, order), order);
}

LaurentSeries series_e_odd_form(long order) {
    if (order < 1) throw std::invalid_argument("series_e_odd_form: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    c[0] = Rational(1);
    for (long d = 1; d < order; d += 2)
        for (long e = d; e < order; e += d)
            c[static_cast<std::size_t>(e)] += Rational(24 * d);
    return LaurentSeries(0, std::move(c));
}

LaurentSeries eisenstein_level2(int k, long order) {
    if (k < 2 || k % 2 != 0)
        throw std::domain_error("eisenstein_level2: weight must be even and >= 2");
    Rational denom = (Rational(1) - Rational(2).pow(k)) * bernoulli(k);
    Rational prefactor = Rational(2 * k) / denom;
    return one_plus(-prefactor, lambert(static_cast<unsigned>(k - 1), true, order), order);
}

LaurentSeries series_psi(long order) {
    if (order < 1) throw std::invalid_argument("series_psi: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    for (long n = 0;; ++n) {
        long t = n * (n + 1) / 2;
        if (t >= order) break;
        c[static_cast<std::size_t>(t)] = Rational(1);
    }
    return LaurentSeries(0, std::move(c));
}

LaurentSeries series_psi_product(long order) {
    return product_expand({{2, 2, 1}, {1, 2, -1}}, order);
}

LaurentSeries series_D(long order) {
    LaurentSeries e = series_e(order);
    LaurentSeries q = series_scriptQ(order);
    return (e * e - q) / Rational(64);
}

LaurentSeries series_j2(long order) {
    long inner = order + 2;  // lost to the valuation-1 division by D
    LaurentSeries e = series_e(inner);
    LaurentSeries d = series_D(inner);
    return truncate(e * e * invert(d, order), order);
}

namespace {

long parse_long(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("series name: missing integer parameter");
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("series name: bad integer parameter '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("series name: bad integer parameter '" + s + "'");
    return v;
}

unsigned parse_unsigned(const std::string& s) {
    long v = parse_long(s);
    if (v < 0) throw std::invalid_argument("series name: parameter must be nonnegative");
    return static_cast<unsigned>(v);
}

}  // namespace

LaurentSeries make_series_by_name(const std::string& name, long order) {
    if (name == "P") return series_P(order);
    if (name == "Q") return series_Q(order);
    if (name == "R") return series_R(order);
    if (name == "scriptP") return series_scriptP(order);
    if (name == "e") return series_e(order);
    if (name == "scriptQ") return series_scriptQ(order);
    if (name == "psi") return series_psi(order);
    if (name == "D") return series_D(order);
    if (name == "j2") return series_j2(order);

    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = name.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(name.substr(start));
            break;
        }
        parts.push_back(name.substr(start, colon - start));
        start = colon + 1;
    }
    if (parts.size() == 2 && (parts[0] == "E1" || parts[0] == "E2")) {
        long k = parse_long(parts[1]);
        if (k < 2 || k > 1000 || k % 2 != 0)
            throw std::invalid_argument("series name: weight must be even, 2 <= k <= 1000");
        return parts[0] == "E1" ? eisenstein_level1(static_cast<int>(k), order)
                                : eisenstein_level2(static_cast<int>(k), order);
    }
    if (parts.size() == 3 && (parts[0] == "Psi" || parts[0] == "Phi")) {
        unsigned r = parse_unsigned(parts[1]);
        unsigned s = parse_unsigned(parts[2]);
        return parts[0] == "Psi" ? psi_double_sum(r, s, order) : phi_double_sum(r, s, order);
    }
    throw std::invalid_argument("unknown series name '" + name + "'");
}

std::vector<std::string> registry_names() {
    return {"P", "Q", "R", "scriptP", "e", "scriptQ", "E1:k", "E2:k",
            "psi", "D", "j2", "Psi:r:s", "Phi:r:s"};
}

}  // namespace qforms
