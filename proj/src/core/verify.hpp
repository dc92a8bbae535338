#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/bigint.hpp"
#include "core/code_system.hpp"

namespace udc {

inline constexpr std::uint64_t kDefaultTupleGuard = 100'000'000;

struct UDReport {
    bool is_ud = false;
    Int total_tuples;
    Int distinct_sums;
    // Two distinct tuples with the same coordinate-wise sum; present iff !is_ud.
    std::optional<std::pair<std::vector<Codeword>, std::vector<Codeword>>> witness;
    std::vector<int> witness_sum; // the common sum vector, d entries
};

// Exhaustive check that all coordinate-wise sums over Z^d are distinct.
// Enumerates prod |C_i| tuples; throws guard_exceeded beyond the tuple guard.
// Memory scales with the tuple count (8 bytes per tuple for d <= 16).
UDReport verify_ud(const CodeSystem& sys, std::uint64_t guard = kDefaultTupleGuard);

// Number of unordered pairs of distinct tuples with identical sums:
// sum over sum-multiplicities m of C(m,2). Zero iff the system is UD.
std::uint64_t conflict_count(const CodeSystem& sys, std::uint64_t guard = kDefaultTupleGuard);

} // namespace udc
