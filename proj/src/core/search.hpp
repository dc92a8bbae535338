#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/code_system.hpp"
#include "core/glue.hpp"

namespace udc {

struct SearchConfig {
    int n_max = 1;
    // Fixed per-index cap on every g_i; when absent, caps default to
    // ceil(3*sigma_i*sqrt(n)) per n and expand automatically whenever the
    // per-n argmax lands on a cap.
    std::optional<int> g_cap;
    // Partition of the constituent indices 2..T (1-based):
    // indices in one group share a single g value; zero_fixed pins g_i = 0.
    std::vector<std::vector<int>> groups;
    std::vector<int> zero_fixed;
    // Called after each completed power (n, n_max) during the sweep.
    std::function<void(int, int)> progress;
};

// Default constraints: identical weight distributions share a group,
// zero-variance constituents are pinned to g = 0.
SearchConfig symmetry_groups(const CodeSystem& norm);

struct SearchOutcome {
    ConstructionResult best;
    std::uint64_t evaluated = 0;          // (n, g) points enumerated
    std::vector<GlueParams> ties;         // other points matching best.rate within 1e-12
    bool tie_overflow = false;            // near-best buffer overflowed; ties incomplete
    bool cap_hit = false;                 // a per-n argmax sat on a fixed g cap
};

// Exhaustive maximization of the glued rate over n <= n_max and all
// group-respecting g assignments on one normalized system. Deterministic;
// ties broken by smallest n, then lexicographically smallest g. Throws
// balanced_seed when avg-weight(C_1) = d/2 (the construction cannot help).
SearchOutcome search(const CodeSystem& norm, const SearchConfig& config);

} // namespace udc
