#pragma once

#include <vector>

#include "core/bigint.hpp"
#include "core/code_system.hpp"

namespace udc {

struct NormalizationCandidate {
    CodeSystem system;            // negated, minimizing code moved to front
    Codeword mask;                // negated coordinates
    std::vector<int> code_order;  // original constituent indices, fronted first
};

struct NormalizationResult {
    Rat min_average_weight;
    std::vector<NormalizationCandidate> candidates; // ascending (mask, original index)
    bool truncated = false;                         // more than the cap existed
};

inline constexpr int kNormalizationCandidateCap = 1024;

// Negation-mask normalization: over all 2^d masks, minimize
// min_i avg-weight(C_i ^ mask) exactly; returns every optimal (mask, code)
// pair with that code reindexed to the front. Requires d <= 24.
NormalizationResult normalize_step1(const CodeSystem& sys);

} // namespace udc
