#pragma once

#include "qforms/rational.hpp"

namespace qforms {

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer int_pow(unsigned long base, unsigned long e);
Integer int_pow(const Integer& base, unsigned long e);

// Bernoulli number B_k under the convention B_2 = 1/6 (so B_1 = -1/2
// internally). Only even nonnegative indices are exposed; the values are
// memoized, growing the table on demand.
Rational bernoulli(int k);

// Warms the memo table up to index `up_to` (default table size is 64).
void bernoulli_reserve(int up_to);

// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

}  // namespace qforms
