#include "core/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "core/error.hpp"

namespace udc {

namespace {

// Sum vectors are packed into fixed-width lanes so they sort and compare as
// plain integers: nibble lanes in one u64 when d <= 16 (coordinate sums reach
// at most T <= 15), byte lanes in 8 u64 words otherwise (T <= 255).
struct WideKey {
    std::array<std::uint64_t, 8> v{};
    friend bool operator<(const WideKey& a, const WideKey& b) { return a.v < b.v; }
    friend bool operator==(const WideKey& a, const WideKey& b) { return a.v == b.v; }
    WideKey operator+(const WideKey& o) const {
        WideKey r;
        for (int i = 0; i < 8; ++i) r.v[i] = v[i] + o.v[i];
        return r;
    }
};

std::uint64_t pack_nibbles(Codeword w, int d) {
    std::uint64_t r = 0;
    for (int k = 0; k < d; ++k)
        if (w >> k & 1) r |= std::uint64_t{1} << (4 * k);
    return r;
}

WideKey pack_bytes(Codeword w, int d) {
    WideKey r;
    for (int k = 0; k < d; ++k)
        if (w >> k & 1) r.v[k / 8] |= std::uint64_t{1} << (8 * (k % 8));
    return r;
}

std::uint64_t checked_total(const CodeSystem& sys, std::uint64_t guard) {
    Int total = sys.total_tuples();
    if (total > static_cast<unsigned long>(guard))
        fail(errc::guard_exceeded, "tuple count " + total.get_str() + " exceeds the enumeration guard " +
                                       std::to_string(guard));
    return mpz_get_ui(total.get_mpz_t());
}

// Enumerates all tuple sums in mixed-radix order (first constituent fastest)
// and calls sink(key) for each.
template <typename Key, typename Packer, typename Sink>
void enumerate_sums(const CodeSystem& sys, Packer pack, Sink&& sink) {
    const int T = sys.users();
    std::vector<std::vector<Key>> packed(T);
    for (int i = 0; i < T; ++i)
        for (Codeword w : sys.codes[i]) packed[i].push_back(pack(w, sys.d));
    std::vector<std::size_t> idx(T, 0);
    // rest[i] = sum of packed[j][idx[j]] for j > i
    std::vector<Key> rest(T + 1, Key{});
    for (int i = T - 1; i >= 1; --i) rest[i] = rest[i + 1] + packed[i][0];
    for (;;) {
        const Key base = rest[1];
        for (const Key& p0 : packed[0]) sink(base + p0);
        int i = 1;
        while (i < T && idx[i] + 1 == packed[i].size()) idx[i++] = 0;
        if (i == T) break;
        ++idx[i];
        for (int j = i; j >= 1; --j) rest[j] = rest[j + 1] + packed[j][idx[j]];
    }
}

template <typename Key, typename Packer>
UDReport run_verify(const CodeSystem& sys, std::uint64_t total, Packer pack) {
    std::vector<Key> keys;
    keys.reserve(total);
    enumerate_sums<Key>(sys, pack, [&](const Key& k) { keys.push_back(k); });
    std::sort(keys.begin(), keys.end());
    std::uint64_t distinct = 0;
    std::optional<Key> collided;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i == 0 || !(keys[i] == keys[i - 1])) ++distinct;
        else if (!collided) collided = keys[i];
    }
    UDReport rep;
    rep.total_tuples = sys.total_tuples();
    rep.distinct_sums = Int(static_cast<unsigned long>(distinct));
    rep.is_ud = (distinct == total);
    if (collided) {
        // second pass: recover the first two tuples hitting the collided sum
        std::vector<std::uint64_t> hits;
        std::uint64_t pos = 0;
        enumerate_sums<Key>(sys, pack, [&](const Key& k) {
            if (hits.size() < 2 && k == *collided) hits.push_back(pos);
            ++pos;
        });
        auto decode = [&](std::uint64_t t) {
            std::vector<Codeword> tup;
            for (const auto& c : sys.codes) {
                tup.push_back(c[t % c.size()]);
                t /= c.size();
            }
            return tup;
        };
        rep.witness = std::make_pair(decode(hits[0]), decode(hits[1]));
        rep.witness_sum.assign(sys.d, 0);
        for (Codeword w : rep.witness->first)
            for (int k = 0; k < sys.d; ++k) rep.witness_sum[k] += static_cast<int>(w >> k & 1);
    }
    return rep;
}

template <typename Key, typename Packer>
std::uint64_t run_conflicts(const CodeSystem& sys, std::uint64_t total, Packer pack) {
    std::vector<Key> keys;
    keys.reserve(total);
    enumerate_sums<Key>(sys, pack, [&](const Key& k) { keys.push_back(k); });
    std::sort(keys.begin(), keys.end());
    std::uint64_t pairs = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= keys.size(); ++i) {
        if (i < keys.size() && keys[i] == keys[i - 1]) {
            ++run;
        } else {
            pairs += run * (run - 1) / 2;
            run = 1;
        }
    }
    return pairs;
}

void check_supported(const CodeSystem& sys) {
    validate(sys);
    if (sys.users() > 255) fail(errc::unsupported, "more than 255 users is not supported");
}

} // namespace

UDReport verify_ud(const CodeSystem& sys, std::uint64_t guard) {
    check_supported(sys);
    std::uint64_t total = checked_total(sys, guard);
    if (sys.d <= 16 && sys.users() <= 15) return run_verify<std::uint64_t>(sys, total, pack_nibbles);
    return run_verify<WideKey>(sys, total, pack_bytes);
}

std::uint64_t conflict_count(const CodeSystem& sys, std::uint64_t guard) {
    check_supported(sys);
    std::uint64_t total = checked_total(sys, guard);
    if (sys.d <= 16 && sys.users() <= 15) return run_conflicts<std::uint64_t>(sys, total, pack_nibbles);
    return run_conflicts<WideKey>(sys, total, pack_bytes);
}

} // namespace udc
