#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace udc {

// All counts are exact integers, all weight thresholds exact rationals.
using Int = mpz_class;
using Rat = mpq_class;

// log2 of a positive integer. Exact bit count plus log2l of the top 64 bits,
// absolute error below 1e-16 even for numbers of thousands of bits.
long double log2_int(const Int& x);

// Sum of log2(factor) over all factors; rejects factors < 1.
long double log2_product(const std::vector<Int>& factors);

// floor(x / 10^-k) / 10^k rendered as a decimal string ("rounded down"), and
// the matching round-up variant. Both expect x >= 0.
std::string format_truncated(long double x, int decimals);
std::string format_rounded_up(long double x, int decimals);

// Exact rational as "num/den" ("3" when integral).
std::string format_rational(const Rat& q);

// Largest integer <= q and smallest integer >= q.
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

} // namespace udc
