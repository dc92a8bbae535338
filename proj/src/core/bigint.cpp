#include "core/bigint.hpp"

#include <cmath>
#include <cstdint>

#include "core/error.hpp"

namespace udc {

long double log2_int(const Int& x) {
    if (x <= 0) fail(errc::invalid_argument, "log2 of non-positive integer");
    size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    if (bits <= 64) return std::log2(static_cast<long double>(mpz_get_ui(x.get_mpz_t())));
    // top 64 bits: x >> (bits-64) lies in [2^63, 2^64); the discarded low bits
    // change log2 by less than 2^-63
    Int top = x >> static_cast<unsigned long>(bits - 64);
    uint64_t m = 0;
    size_t count = 0;
    mpz_export(&m, &count, 1, sizeof(m), 0, 0, top.get_mpz_t());
    return std::log2(static_cast<long double>(m)) + static_cast<long double>(bits - 64);
}

long double log2_product(const std::vector<Int>& factors) {
    long double acc = 0;
    for (const Int& f : factors) {
        if (f < 1) fail(errc::invalid_argument, "log2_product: factor < 1");
        acc += log2_int(f);
    }
    return acc;
}

namespace {

std::string format_scaled(long double x, int decimals, bool up) {
    if (decimals < 0 || decimals > 18) fail(errc::invalid_argument, "decimals out of range");
    if (x < 0) fail(errc::invalid_argument, "negative value in decimal formatting");
    long double p = std::pow(10.0L, decimals);
    long double scaled = up ? std::ceil(x * p) : std::floor(x * p);
    if (scaled >= 9.2e18L) fail(errc::invalid_argument, "value too large for decimal formatting");
    unsigned long long units = static_cast<unsigned long long>(scaled);
    std::string digits = std::to_string(units);
    if (decimals == 0) return digits;
    if (digits.size() <= static_cast<size_t>(decimals))
        digits.insert(0, decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
    return digits;
}

} // namespace

std::string format_truncated(long double x, int decimals) { return format_scaled(x, decimals, false); }

std::string format_rounded_up(long double x, int decimals) { return format_scaled(x, decimals, true); }

std::string format_rational(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

} // namespace udc
