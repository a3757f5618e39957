#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qforms/series.hpp"

#include <random>

using qforms::LaurentSeries;
using qforms::Rational;

namespace {

LaurentSeries poly(long valuation, std::vector<long> coeffs, long order) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return LaurentSeries(valuation, std::move(c)).as_known_to(order);
}

LaurentSeries random_series(std::mt19937_64& rng, bool nonzero_lead = false) {
    std::uniform_int_distribution<long> val(-3, 3);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<Rational> c(len(rng));
    for (auto& x : c) x = Rational(num(rng), den(rng));
    if (nonzero_lead && c[0].is_zero()) c[0] = Rational(1);
    return LaurentSeries(val(rng), std::move(c));
}

// independent divisor sum for the lambert oracle
long brute_divisor_sum(unsigned s, long n, bool alternating) {
    long acc = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long p = 1;
        for (unsigned i = 0; i < s; ++i) p *= d;
        acc += (alternating && d % 2 == 0) ? -p : p;
    }
    return acc;
}

}  // namespace

TEST_CASE("addition examples") {
    CHECK(qforms::equal_on_range(poly(0, {1, 1}, 4) + poly(0, {1, -1}, 4),
                                 poly(0, {2}, 4), 0, 4));
    LaurentSeries f = poly(0, {3, 1, 4}, 5);
    CHECK(qforms::equal_on_range(f + LaurentSeries::zero(5), f, 0, 5));
    // valuation cancellation renormalizes
    LaurentSeries g = poly(-1, {1, 1}, 4) + poly(-1, {-1}, 4);
    CHECK(g.valuation() == 0);
    CHECK(qforms::equal_on_range(g, poly(0, {1}, 4), -1, 4));
}

TEST_CASE("multiplication examples") {
    CHECK(qforms::equal_on_range(poly(0, {1, 1}, 6) * poly(0, {1, -1}, 6),
                                 poly(0, {1, 0, -1}, 6), 0, 6));
    LaurentSeries f = poly(1, {2, 5}, 7);
    CHECK(qforms::equal_on_range(f * LaurentSeries::constant(Rational(1), 7), f, 0, 7));
    CHECK(qforms::equal_on_range(poly(0, {1, 1, 1, 1}, 8) * poly(0, {1, -1}, 8),
                                 poly(0, {1, 0, 0, 0, -1}, 8), 0, 8));
}

TEST_CASE("truncation propagation is the tightest correct bound") {
    LaurentSeries f = poly(0, {1, 2}, 5);
    LaurentSeries g = poly(0, {1, 1}, 9);
    CHECK((f + g).order() == 5);
    CHECK((f * g).order() == 5);
    LaurentSeries h = poly(2, {1}, 6);  // valuation 2
    CHECK((f * h).order() == 7);        // min(5 + 2, 6 + 0)
    CHECK((f * h).valuation() == 2);
    // multiplying by a zero series keeps only what stays provably zero
    LaurentSeries z = LaurentSeries::zero(4);
    CHECK((f * z).is_zero());
    CHECK((f * z).order() == 4);  // min(5 + 4, 4 + 0)
}

TEST_CASE("coefficient reads beyond the order throw") {
    LaurentSeries f = poly(0, {1, 2}, 2);
    CHECK(f.coeff(1) == Rational(2));
    CHECK_THROWS_AS(f.coeff(2), std::out_of_range);
    CHECK_THROWS_AS(qforms::equal_on_range(f, f, 0, 3), std::domain_error);
    CHECK_THROWS_AS(qforms::equal_on_range(f, f, 1, 1), std::invalid_argument);
}

TEST_CASE("invert examples") {
    // geometric series
    LaurentSeries inv = qforms::invert(poly(0, {1, -1}, 10), 10);
    for (long j = 0; j < 10; ++j) CHECK(inv.coeff(j) == Rational(1));
    // monomial inverse
    LaurentSeries qinv = qforms::invert(LaurentSeries::monomial(Rational(1), 1, 10), 8);
    CHECK(qinv.valuation() == -1);
    CHECK(qinv.coeff(-1) == Rational(1));
    CHECK(!qforms::first_nonzero(qinv, 0, 8).has_value());
    // triangular-system example: the inverse of 1 + 8q + 28q^2 + 64q^3,
    // coefficients frozen from the defining recursion
    // d_k = -sum_{j=1..k} c_j d_{k-j} (d_0 = 1)
    LaurentSeries f = poly(0, {1, 8, 28, 64}, 4);
    LaurentSeries g = qforms::invert(f, 4);
    CHECK(g.coeff(0) == Rational(1));
    CHECK(g.coeff(1) == Rational(-8));
    CHECK(g.coeff(2) == Rational(36));
    CHECK(g.coeff(3) == Rational(-128));
}

TEST_CASE("invert of the zero series is an error") {
    CHECK_THROWS_AS(qforms::invert(LaurentSeries::zero(5), 5), std::domain_error);
}

TEST_CASE("invert against multiplication on random series") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentSeries f = random_series(rng, true);
        long request = f.order() - 2 * f.valuation();
        LaurentSeries g = qforms::invert(f, request);
        LaurentSeries prod = f * g;
        REQUIRE(prod.order() >= 1);
        long lo = std::min(0L, prod.valuation());
        CHECK(qforms::equal_on_range(
            prod, LaurentSeries::constant(Rational(1), prod.order()), lo, prod.order()));
    }
}

TEST_CASE("theta examples and derivation property") {
    CHECK(qforms::theta(LaurentSeries::constant(Rational(1), 5)).is_zero());
    CHECK(qforms::equal_on_range(qforms::theta(poly(1, {1, 0, 1}, 6)),
                                 poly(1, {1, 0, 3}, 6), 0, 6));
    LaurentSeries f = poly(0, {1, 1}, 5);
    LaurentSeries g = poly(0, {1, 0, 1}, 5);
    CHECK(qforms::equal_on_range(qforms::theta(f * g),
                                 qforms::theta(f) * g + f * qforms::theta(g), 0, 5));
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentSeries a = random_series(rng);
        LaurentSeries b = random_series(rng);
        LaurentSeries lhs = qforms::theta(a * b);
        LaurentSeries rhs = qforms::theta(a) * b + a * qforms::theta(b);
        long hi = std::min(lhs.order(), rhs.order());
        long lo = std::min({0L, lhs.valuation(), rhs.valuation()});
        if (lo < hi)
            CHECK(qforms::equal_on_range(lhs, rhs, lo, hi));
    }
}

TEST_CASE("ring laws on random truncated series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentSeries a = random_series(rng);
        LaurentSeries b = random_series(rng);
        LaurentSeries c = random_series(rng);
        LaurentSeries ab_c = (a * b) * c;
        LaurentSeries a_bc = a * (b * c);
        long lo = std::min(ab_c.valuation(), a_bc.valuation());
        long hi = std::min(ab_c.order(), a_bc.order());
        if (lo < hi) CHECK(qforms::equal_on_range(ab_c, a_bc, lo, hi));
        LaurentSeries ab = a * b;
        LaurentSeries ba = b * a;
        if (std::min(ab.order(), ba.order()) > ab.valuation())
            CHECK(qforms::equal_on_range(ab, ba, ab.valuation(),
                                         std::min(ab.order(), ba.order())));
        LaurentSeries lhs = a * (b + c);
        LaurentSeries rhs = a * b + a * c;
        lo = std::min({0L, lhs.valuation(), rhs.valuation()});
        hi = std::min(lhs.order(), rhs.order());
        if (lo < hi) CHECK(qforms::equal_on_range(lhs, rhs, lo, hi));
    }
}

TEST_CASE("lambert examples") {
    LaurentSeries plain = qforms::lambert(1, false, 4);
    CHECK(plain.coeff(1) == Rational(1));
    CHECK(plain.coeff(2) == Rational(3));
    CHECK(plain.coeff(3) == Rational(4));
    LaurentSeries alt = qforms::lambert(1, true, 4);
    CHECK(alt.coeff(1) == Rational(1));
    CHECK(alt.coeff(2) == Rational(-1));
    CHECK(alt.coeff(3) == Rational(4));
    LaurentSeries alt3 = qforms::lambert(3, true, 3);
    CHECK(alt3.coeff(1) == Rational(1));
    CHECK(alt3.coeff(2) == Rational(-7));
}

TEST_CASE("lambert coefficients are divisor sums up to order 60") {
    for (unsigned s = 0; s <= 3; ++s) {
        LaurentSeries alt = qforms::lambert(s, true, 60);
        LaurentSeries plain = qforms::lambert(s, false, 60);
        for (long n = 1; n < 60; ++n) {
            CHECK(alt.coeff(n) == Rational(brute_divisor_sum(s, n, true)));
            CHECK(plain.coeff(n) == Rational(brute_divisor_sum(s, n, false)));
        }
    }
}

TEST_CASE("lambert_plus examples") {
    LaurentSeries f = qforms::lambert_plus(1, 4);
    CHECK(f.coeff(1) == Rational(1));
    CHECK(f.coeff(2) == Rational(1));
    CHECK(f.coeff(3) == Rational(4));
    LaurentSeries g = qforms::lambert_plus(1, 2);
    CHECK(g.valuation() == 1);
    CHECK(g.coeff(1) == Rational(1));
    LaurentSeries h = qforms::lambert_plus(0, 4);
    CHECK(h.coeff(1) == Rational(1));
    CHECK(h.coeff(2) == Rational(0));
    CHECK(h.coeff(3) == Rational(2));
}

TEST_CASE("psi_double_sum examples") {
    LaurentSeries a = qforms::psi_double_sum(0, 1, 3);
    CHECK(a.coeff(1) == Rational(1));
    CHECK(a.coeff(2) == Rational(-1));
    LaurentSeries b = qforms::psi_double_sum(1, 0, 3);
    CHECK(b.coeff(1) == Rational(1));
    CHECK(b.coeff(2) == Rational(1));
    LaurentSeries c = qforms::psi_double_sum(0, 3, 2);
    CHECK(c.coeff(1) == Rational(1));
}

TEST_CASE("psi_double_sum against lambert and brute force") {
    for (unsigned s = 0; s <= 5; ++s)
        CHECK(qforms::equal_on_range(qforms::psi_double_sum(0, s, 60),
                                     qforms::lambert(s, true, 60), 0, 60));
    for (unsigned r = 0; r <= 3; ++r) {
        LaurentSeries f = qforms::psi_double_sum(r, 0, 60);
        for (long n = 1; n < 60; ++n) {
            long acc = 0;
            for (long m = 1; m <= n; ++m) {
                if (n % m != 0) continue;
                long np = n / m;
                long p = 1;
                for (unsigned i = 0; i < r; ++i) p *= m;
                acc += (np % 2 == 0) ? -p : p;
            }
            CHECK(f.coeff(n) == Rational(acc));
        }
    }
}

TEST_CASE("product expansion examples") {
    // Euler's pentagonal expansion of (q;q)_inf
    LaurentSeries euler = qforms::product_expand({{1, 1, 1}}, 6);
    CHECK(qforms::equal_on_range(euler, poly(0, {1, -1, -1, 0, 0, 1}, 6), 0, 6));
    CHECK(qforms::equal_on_range(qforms::product_expand({}, 3),
                                 LaurentSeries::constant(Rational(1), 3), 0, 3));
    LaurentSeries ratio = qforms::product_expand({{2, 2, 1}, {1, 2, -1}}, 7);
    CHECK(qforms::equal_on_range(ratio, poly(0, {1, 1, 0, 1, 0, 0, 1}, 7), 0, 7));
}

TEST_CASE("product expansion rejects bad progressions") {
    CHECK_THROWS_AS(qforms::product_expand({{0, 1, 1}}, 5), std::domain_error);
    CHECK_THROWS_AS(qforms::product_expand({{1, 0, 1}}, 5), std::domain_error);
    CHECK_THROWS_AS(qforms::product_expand({{1, 1, 2}}, 5), std::domain_error);
}

TEST_CASE("zero series bookkeeping") {
    LaurentSeries z = LaurentSeries::zero(6);
    CHECK(z.is_zero());
    CHECK(z.order() == 6);
    CHECK(z.valuation() == 6);
    CHECK(z.coeff(3) == Rational(0));
    CHECK_THROWS_AS(z.coeff(6), std::out_of_range);
    // scalar zero keeps order
    LaurentSeries f = poly(0, {1, 2}, 4);
    CHECK((Rational(0) * f).is_zero());
    CHECK((Rational(0) * f).order() == 4);
}
