#include "qforms/combinatorics.hpp"

#include "qforms/forms.hpp"

#include <stdexcept>

namespace qforms {

std::optional<long> triangular_index(long n) {
    if (n < 0) return std::nullopt;
    // n = r(r+1)/2 iff 8n+1 is an odd square
    Integer root;
    Integer target = Integer(8) * Integer(n) + 1;
    if (mpz_perfect_square_p(target.get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
    Integer r = (root - 1) / 2;
    return r.get_si();
}

Rational theorem5_lhs(long n, const Rational& wt_zero) {
    if (n < 1) throw std::domain_error("theorem5_lhs: n must be >= 1");
    Rational acc(0);
    for (long k = 0;; ++k) {
        long t = k * (k + 1) / 2;
        if (t > n) break;
        long j = n - t;
        acc += (j == 0) ? wt_zero : wt(1, j);
    }
    return Rational(8) * acc;
}

Rational theorem5_expected(long n) {
    auto r = triangular_index(n);
    if (!r) return Rational(0);
    long odd = 2 * *r + 1;
    return Rational(odd * odd);
}

Verdict verify_theorem5(long max_n, const Rational& wt_zero) {
    Verdict v;
    v.name = "triangular convolution of wt (divisor-sum and series routes)";
    if (max_n < 1) throw std::invalid_argument("verify_theorem5: max_n must be >= 1");

    std::vector<Integer> wt1 = wt_table(1, max_n);
    LaurentSeries product = series_scriptP(max_n + 1) * series_psi(max_n + 1);

    long failures = 0;
    for (long n = 1; n <= max_n; ++n) {
        Rational expected = theorem5_expected(n);
        Rational brute(0);
        for (long k = 0;; ++k) {
            long t = k * (k + 1) / 2;
            if (t > n) break;
            long j = n - t;
            brute += (j == 0) ? wt_zero : Rational(wt1[static_cast<std::size_t>(j)]);
        }
        brute *= Rational(8);
        const Rational& series_coeff = product.coeff(n);
        if (brute != expected || series_coeff != expected) {
            ++failures;
            if (!v.first_difference) {
                v.first_difference = n;
                v.detail = "first failing n = " + std::to_string(n) +
                           (brute != expected ? " (divisor-sum route)" : " (series route)");
            }
        }
    }
    if (failures > 0 && v.detail.size() > 0)
        v.detail += ", " + std::to_string(failures) + " failing n in total";
    v.pass = failures == 0;
    return v;
}

namespace {

// floor(sqrt(v)) for v >= 0, exactly
long isqrt(long v) {
    Integer root;
    Integer value(v);
    mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
    return root.get_si();
}

}  // namespace

LatticeCount enumerate_AB(long n) {
    if (n < 1) throw std::domain_error("enumerate_AB: n must be >= 1");
    LatticeCount out;
    out.n = n;
    long target = 8 * n + 1;
    for (long x = 2; 2 * x * x < target; x += 2) {
        long rest = target - 2 * x * x;
        long y = isqrt(rest);
        if (y >= 1 && y * y == rest && y % 2 == 1) ++out.countA;
    }
    for (long x = 4; x * x < target; x += 4) {
        long rest = target - x * x;
        long y = isqrt(rest);
        if (y >= 1 && y * y == rest && y % 2 == 1) ++out.countB;
    }
    return out;
}

Verdict verify_parity_corollary(long max_n) {
    Verdict v;
    v.name = "parity of lattice counts A and B";
    if (max_n < 1) throw std::invalid_argument("verify_parity_corollary: max_n must be >= 1");
    for (long n = 1; n <= max_n; ++n) {
        LatticeCount c = enumerate_AB(n);
        bool same_parity = (c.countA % 2) == (c.countB % 2);
        auto r = triangular_index(n);
        bool exceptional = r && (*r % 4 == 1 || *r % 4 == 2);
        if (same_parity == exceptional) {
            v.pass = false;
            v.first_difference = n;
            v.detail = "dichotomy fails at n = " + std::to_string(n) + " (countA = " +
                       std::to_string(c.countA) + ", countB = " + std::to_string(c.countB) +
                       (r ? ", triangular with r = " + std::to_string(*r) : "") + ")";
            return v;
        }
    }
    v.pass = true;
    return v;
}

}  // namespace qforms
