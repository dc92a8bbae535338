#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/code_system.hpp"
#include "core/verify.hpp"

namespace udc {

struct DiscoverySpec {
    int d = 1;
    std::vector<int> sizes;          // target constituent sizes
    std::uint64_t budget = 100000;   // total moves across restarts
    int tenure = 8;                  // iterations a touched (code, word) pair stays tabu
    std::uint64_t seed = 1;
    std::uint64_t guard = kDefaultTupleGuard;
};

struct DiscoveryResult {
    std::optional<CodeSystem> system; // present iff a conflict-free system was found
    std::uint64_t iterations = 0;     // moves applied
    std::uint64_t best_conflicts = 0; // lowest conflict count seen
    int restarts = 0;
};

// Tabu search over systems of the given shape: neighborhood swaps one
// codeword for an unused word, the objective is the colliding-pair count,
// recently touched (constituent, word) pairs are tabu, a tabu move is still
// allowed when it reaches zero conflicts, and the search restarts from a
// fresh random system after 2000 non-improving moves. Deterministic for a
// fixed seed.
DiscoveryResult tabu_search(const DiscoverySpec& spec);

} // namespace udc
