#pragma once

#include <vector>

#include "core/bigint.hpp"
#include "core/code_system.hpp"
#include "core/verify.hpp"
#include "core/weight_distribution.hpp"

namespace udc {

struct GlueParams {
    int n = 1;                // tensor power
    std::vector<int> g;       // g_2..g_T, one entry per non-first constituent
    int g_total() const;
};

struct ConstructionResult {
    GlueParams params;
    std::vector<Int> sizes;   // |C_1*|, ..., |C_T*|
    Int a_size;               // |A*|, weights in [0, dn/2 - g - 1]
    Int b_size;               // |B*|, complement-power weights in [dn/2 + g, dn]
    long dim = 0;             // d*n
    double rate = 0;          // (1/dim) log2 prod sizes
};

// Banded sizes on a normalized system: |C_i*| for i >= 2 from the
// n-fold power spectra, |C_1*| = |A*| + |B*|. Throws empty_constituent when
// any size is zero.
ConstructionResult improved_sizes(const CodeSystem& norm, const GlueParams& params);

// Same, with the power distributions supplied (the search reuses its
// incremental spectra).
ConstructionResult improved_sizes(const CodeSystem& norm, const GlueParams& params,
                                  const std::vector<WeightDistribution>& powers);

long double construction_rate(const std::vector<Int>& sizes, long dim);

struct SeparationCertificate {
    Int a_side_max;  // largest possible sum weight with C_1* drawn from A*
    Int b_side_min;  // smallest possible sum weight with C_1* drawn from B*
    Int gap;         // b_side_min - a_side_max, always >= 1
};

// Certifies that A*-side and B*-side sums can never share a weight; the band
// endpoints offset the +-g_i windows exactly, so the gap is at least 1.
SeparationCertificate weight_separation(const CodeSystem& norm, const GlueParams& params,
                                        const ConstructionResult& result);

// Explicitly enumerates the glued system in dimension d*n (requires
// d*n <= 64 and sizes within the tuple guard); used to brute-check the
// construction at small scale.
CodeSystem materialize_small(const CodeSystem& norm, const GlueParams& params,
                             std::uint64_t guard = kDefaultTupleGuard);

} // namespace udc
