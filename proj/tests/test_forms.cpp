#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qforms/forms.hpp"
#include "qforms/numbers.hpp"

using qforms::Integer;
using qforms::LaurentSeries;
using qforms::Rational;

TEST_CASE("divisor power sums") {
    CHECK(qforms::sigma(1, 1) == Rational(1));
    CHECK(qforms::sigma(1, 6) == Rational(12));
    CHECK(qforms::sigma(3, 2) == Rational(9));
    CHECK(qforms::sigma(1, 0) == Rational(0));
    CHECK(qforms::sigma(1, -4) == Rational(0));
}

TEST_CASE("alternating divisor sums") {
    CHECK(qforms::wt(1, 1) == Rational(1));
    CHECK(qforms::wt(1, 4) == Rational(-5));
    CHECK(qforms::wt(3, 2) == Rational(-7));
    CHECK(qforms::wt(1, 0) == Rational(0));
    CHECK(qforms::wt(2, -3) == Rational(0));
}

TEST_CASE("wt in terms of sigma for n up to 10^4") {
    // wt_s(n) = sigma_s(n) - 2^(s+1) sigma_s(n/2), via the sieved tables,
    // which must in turn agree with trial division.
    const long n_max = 10000;
    for (unsigned s = 0; s <= 5; ++s) {
        std::vector<Integer> wt_t = qforms::wt_table(s, n_max);
        std::vector<Integer> sig_t = qforms::sigma_table(s, n_max);
        Integer pow2 = qforms::int_pow(2UL, s + 1);
        for (long n = 1; n <= n_max; ++n) {
            Integer half = (n % 2 == 0) ? sig_t[static_cast<std::size_t>(n / 2)] : Integer(0);
            CHECK(wt_t[static_cast<std::size_t>(n)] ==
                  sig_t[static_cast<std::size_t>(n)] - pow2 * half);
        }
    }
    for (unsigned s = 0; s <= 5; ++s) {
        std::vector<Integer> wt_t = qforms::wt_table(s, 300);
        std::vector<Integer> sig_t = qforms::sigma_table(s, 300);
        for (long n = 1; n <= 300; ++n) {
            CHECK(Rational(wt_t[static_cast<std::size_t>(n)]) == qforms::wt(s, n));
            CHECK(Rational(sig_t[static_cast<std::size_t>(n)]) == qforms::sigma(s, n));
        }
    }
}

TEST_CASE("level-1 series leading coefficients") {
    LaurentSeries p = qforms::series_P(3);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(-24));
    CHECK(p.coeff(2) == Rational(-72));
    LaurentSeries q = qforms::series_Q(3);
    CHECK(q.coeff(1) == Rational(240));
    CHECK(q.coeff(2) == Rational(2160));
    LaurentSeries r = qforms::series_R(2);
    CHECK(r.coeff(0) == Rational(1));
    CHECK(r.coeff(1) == Rational(-504));
}

TEST_CASE("level-2 series leading coefficients") {
    LaurentSeries p = qforms::series_scriptP(5);
    CHECK(p.coeff(1) == Rational(8));
    CHECK(p.coeff(2) == Rational(-8));
    CHECK(p.coeff(3) == Rational(32));
    CHECK(p.coeff(4) == Rational(-40));
    LaurentSeries e = qforms::series_e(5);
    CHECK(e.coeff(1) == Rational(24));
    CHECK(e.coeff(2) == Rational(24));
    CHECK(e.coeff(3) == Rational(96));
    CHECK(e.coeff(4) == Rational(24));
    LaurentSeries q = qforms::series_scriptQ(5);
    CHECK(q.coeff(1) == Rational(-16));
    CHECK(q.coeff(2) == Rational(112));
    CHECK(q.coeff(3) == Rational(-448));
    CHECK(q.coeff(4) == Rational(1136));
}

TEST_CASE("scriptP coefficients are 8 wt(n) up to 200") {
    LaurentSeries p = qforms::series_scriptP(201);
    for (long n = 1; n <= 200; ++n)
        CHECK(p.coeff(n) == Rational(8) * qforms::wt(1, n));
}

TEST_CASE("level-1 eisenstein at low weights") {
    CHECK(qforms::equal_on_range(qforms::eisenstein_level1(4, 40), qforms::series_Q(40),
                                 0, 40));
    CHECK(qforms::equal_on_range(qforms::eisenstein_level1(6, 40), qforms::series_R(40),
                                 0, 40));
    LaurentSeries e2 = qforms::eisenstein_level1(2, 2);
    CHECK(e2.coeff(0) == Rational(1));
    CHECK(e2.coeff(1) == Rational(-24));
    CHECK_THROWS_AS(qforms::eisenstein_level1(3, 10), std::domain_error);
    CHECK_THROWS_AS(qforms::eisenstein_level1(0, 10), std::domain_error);
}

TEST_CASE("level-2 eisenstein at low weights") {
    CHECK(qforms::equal_on_range(qforms::eisenstein_level2(4, 40),
                                 qforms::series_scriptQ(40), 0, 40));
    // the weight-2 extension reproduces scriptP
    CHECK(qforms::equal_on_range(qforms::eisenstein_level2(2, 40),
                                 qforms::series_scriptP(40), 0, 40));
    // at weight 6 the prefactor evaluates to -8
    LaurentSeries e6 = qforms::eisenstein_level2(6, 2);
    CHECK(e6.coeff(0) == Rational(1));
    CHECK(e6.coeff(1) == Rational(8));
    CHECK_THROWS_AS(qforms::eisenstein_level2(5, 10), std::domain_error);
}

TEST_CASE("e equals its odd-index form to order 100") {
    CHECK(qforms::equal_on_range(qforms::series_e(100), qforms::series_e_odd_form(100),
                                 0, 100));
}

TEST_CASE("P = 3 scriptP - 2 e to order 200") {
    LaurentSeries combo = Rational(3) * qforms::series_scriptP(200) -
                          Rational(2) * qforms::series_e(200);
    CHECK(qforms::equal_on_range(qforms::series_P(200), combo, 0, 200));
}

TEST_CASE("psi examples and product form") {
    LaurentSeries psi7 = qforms::series_psi(7);
    CHECK(psi7.coeff(0) == Rational(1));
    CHECK(psi7.coeff(1) == Rational(1));
    CHECK(psi7.coeff(2) == Rational(0));
    CHECK(psi7.coeff(3) == Rational(1));
    CHECK(psi7.coeff(6) == Rational(1));
    LaurentSeries psi2 = qforms::series_psi(2);
    CHECK(psi2.coeff(1) == Rational(1));
    LaurentSeries psi11 = qforms::series_psi(11);
    CHECK(psi11.coeff(10) == Rational(1));
    CHECK(psi11.coeff(9) == Rational(0));
    CHECK(qforms::equal_on_range(qforms::series_psi(200), qforms::series_psi_product(200),
                                 0, 200));
}

TEST_CASE("D expansion") {
    LaurentSeries d = qforms::series_D(6);
    CHECK(d.valuation() == 1);
    CHECK(d.coeff(0) == Rational(0));
    CHECK(d.coeff(1) == Rational(1));
    CHECK(d.coeff(2) == Rational(8));
    CHECK(d.coeff(3) == Rational(28));
    CHECK(d.coeff(4) == Rational(64));
    // frozen from the (e^2 - scriptQ)/64 expansion at order 6
    CHECK(d.coeff(5) == Rational(126));
}

TEST_CASE("j2 expansion") {
    LaurentSeries j2 = qforms::series_j2(3);
    CHECK(j2.valuation() == -1);
    CHECK(j2.order() == 3);
    CHECK(j2.coeff(-1) == Rational(1));
    CHECK(j2.coeff(0) == Rational(40));
    CHECK(j2.coeff(1) == Rational(276));
    CHECK(j2.coeff(2) == Rational(-2048));
    // the normalized function j2 - 40 kills the constant term
    LaurentSeries norm = j2 - LaurentSeries::constant(Rational(40), 3);
    CHECK(norm.coeff(0) == Rational(0));
    CHECK(norm.coeff(-1) == Rational(1));
}

TEST_CASE("j2 times D is e^2") {
    long order = 30;
    LaurentSeries j2 = qforms::series_j2(order);
    LaurentSeries d = qforms::series_D(order + 2);
    LaurentSeries e = qforms::series_e(order);
    CHECK(qforms::equal_on_range(j2 * d, e * e, 0, order));
}

TEST_CASE("registry dispatch") {
    CHECK(qforms::equal_on_range(qforms::make_series_by_name("P", 20),
                                 qforms::series_P(20), 0, 20));
    CHECK(qforms::equal_on_range(qforms::make_series_by_name("E1:4", 20),
                                 qforms::series_Q(20), 0, 20));
    CHECK(qforms::equal_on_range(qforms::make_series_by_name("E2:2", 20),
                                 qforms::series_scriptP(20), 0, 20));
    CHECK(qforms::equal_on_range(qforms::make_series_by_name("Psi:0:3", 20),
                                 qforms::psi_double_sum(0, 3, 20), 0, 20));
    CHECK(qforms::equal_on_range(qforms::make_series_by_name("Phi:1:2", 20),
                                 qforms::phi_double_sum(1, 2, 20), 0, 20));
    CHECK(qforms::make_series_by_name("j2", 5).valuation() == -1);
    CHECK_THROWS_AS(qforms::make_series_by_name("nosuch", 20), std::invalid_argument);
    CHECK_THROWS_AS(qforms::make_series_by_name("E1:x", 20), std::invalid_argument);
    CHECK_THROWS_AS(qforms::make_series_by_name("E1:3", 20), std::invalid_argument);
    CHECK_THROWS_AS(qforms::make_series_by_name("Psi:1", 20), std::invalid_argument);
}

TEST_CASE("P Q R in terms of the plain double sum") {
    // P = 1 - 24 Phi_{0,1}, Q = 1 + 240 Phi_{0,3}, R = 1 - 504 Phi_{0,5}
    long n = 60;
    CHECK(qforms::equal_on_range(
        qforms::series_P(n),
        LaurentSeries::constant(Rational(1), n) + Rational(-24) * qforms::phi_double_sum(0, 1, n),
        0, n));
    CHECK(qforms::equal_on_range(
        qforms::series_Q(n),
        LaurentSeries::constant(Rational(1), n) + Rational(240) * qforms::phi_double_sum(0, 3, n),
        0, n));
    CHECK(qforms::equal_on_range(
        qforms::series_R(n),
        LaurentSeries::constant(Rational(1), n) + Rational(-504) * qforms::phi_double_sum(0, 5, n),
        0, n));
}
