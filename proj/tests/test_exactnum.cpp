#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qforms/numbers.hpp"
#include "qforms/rational.hpp"

#include <random>

using qforms::Integer;
using qforms::Rational;

namespace {

// Independent route for the recurrence tests: the explicit double sum
// B_m = sum_{j=0}^m 1/(j+1) sum_{i=0}^j (-1)^i C(j,i) i^m, which needs no
// recursion and covers odd indices as well.
Rational bernoulli_double_sum(unsigned m) {
    Rational acc(0);
    for (unsigned j = 0; j <= m; ++j) {
        Rational inner(0);
        for (unsigned i = 0; i <= j; ++i) {
            Rational term(qforms::binomial(j, i) * qforms::int_pow(i, m));
            inner += (i % 2 == 0) ? term : -term;
        }
        acc += inner / Rational(static_cast<long>(j) + 1);
    }
    return acc;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).numerator() == -1);
    CHECK(Rational(-2, 4).denominator() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));      // sign moves to the numerator
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);       // zero is 0/1
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic laws on random values") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        CHECK(a + (-a) == Rational(0));
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        // results stay in lowest terms
        Rational c = a * b;
        Integer g;
        mpz_gcd(g.get_mpz_t(), c.numerator().get_mpz_t(), c.denominator().get_mpz_t());
        CHECK(g == 1);
        CHECK(c.denominator() > 0);
    }
}

TEST_CASE("rational division by zero is a hard error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational string form") {
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-691, 2730).str() == "-691/2730");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/-4"), std::invalid_argument);
}

TEST_CASE("rational pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("bernoulli pinned values") {
    CHECK(qforms::bernoulli(0) == Rational(1));
    CHECK(qforms::bernoulli(2) == Rational(1, 6));
    CHECK(qforms::bernoulli(4) == Rational(-1, 30));
    CHECK(qforms::bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli convention is the one that yields 240 and 504") {
    // -2k/B_k at k = 4 and 6 must give the classical Eisenstein coefficients
    CHECK(Rational(-8) / qforms::bernoulli(4) == Rational(240));
    CHECK(Rational(-12) / qforms::bernoulli(6) == Rational(-504));
}

TEST_CASE("bernoulli rejects odd and negative indices") {
    CHECK_THROWS_AS(qforms::bernoulli(3), std::domain_error);
    CHECK_THROWS_AS(qforms::bernoulli(-2), std::domain_error);
    CHECK_THROWS_AS(qforms::bernoulli(1), std::domain_error);
}

TEST_CASE("bernoulli defining recurrence up to index 40") {
    // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, with the independent
    // double-sum values standing in for the odd indices.
    for (unsigned k = 1; k <= 40; ++k) {
        Rational acc(0);
        for (unsigned j = 0; j <= k; ++j)
            acc += Rational(qforms::binomial(k + 1, j)) * bernoulli_double_sum(j);
        CHECK_MESSAGE(acc == Rational(0), "recurrence fails at k = ", k);
    }
    for (unsigned k = 0; k <= 40; k += 2)
        CHECK(qforms::bernoulli(static_cast<int>(k)) == bernoulli_double_sum(k));
}

TEST_CASE("bernoulli reserve extends the table") {
    qforms::bernoulli_reserve(80);
    CHECK(qforms::bernoulli(80) == bernoulli_double_sum(80));
}

TEST_CASE("pochhammer examples") {
    CHECK(qforms::pochhammer(Rational(5, 2), 0) == Rational(1));
    CHECK(qforms::pochhammer(Rational(-1), 2) == Rational(0));
    CHECK(qforms::pochhammer(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("pochhammer splitting identity") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Rational a = random_rational(rng);
        std::uniform_int_distribution<unsigned> nd(0, 10);
        unsigned m = nd(rng), n = nd(rng);
        Rational lhs = qforms::pochhammer(a, m + n);
        Rational rhs = qforms::pochhammer(a, m) *
                       qforms::pochhammer(a + Rational(static_cast<long>(m)), n);
        CHECK(lhs == rhs);
    }
}
