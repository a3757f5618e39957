#include "qforms/numbers.hpp"

#include <mutex>
#include <vector>

namespace qforms {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer int_pow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table;  // all indices, odd ones included

// Defining recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
void extend_table(std::size_t upto) {
    if (bernoulli_table.empty()) bernoulli_table.emplace_back(1);
    for (std::size_t m = bernoulli_table.size(); m <= upto; ++m) {
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * bernoulli_table[j];
        bernoulli_table.push_back(-acc / Rational(Integer(m + 1)));
    }
}

}  // namespace

Rational bernoulli(int k) {
    if (k < 0 || k % 2 != 0)
        throw std::domain_error("bernoulli: index must be even and nonnegative");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    std::size_t want = static_cast<std::size_t>(k);
    if (want >= bernoulli_table.size()) extend_table(want < 64 ? 64 : want);
    return bernoulli_table[want];
}

void bernoulli_reserve(int up_to) {
    if (up_to < 0) return;
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_table(static_cast<std::size_t>(up_to));
}

Rational pochhammer(const Rational& a, unsigned n) {
    Rational r(1);
    Rational term = a;
    for (unsigned i = 0; i < n; ++i) {
        r *= term;
        term += Rational(1);
    }
    return r;
}

}  // namespace qforms
