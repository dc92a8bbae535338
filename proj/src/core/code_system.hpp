#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace udc {

// A codeword is a d-bit vector packed into an unsigned integer; bit k
// (least significant = coordinate 1) carries coordinate k+1.
using Codeword = std::uint64_t;

inline int hamming_weight(Codeword c) { return std::popcount(c); }

// T constituent codes over {0,1}^d. Each code is kept sorted and
// duplicate-free; construction validates every invariant.
struct CodeSystem {
    int d = 0;
    std::string name;
    std::vector<std::vector<Codeword>> codes;

    int users() const { return static_cast<int>(codes.size()); }
    Int total_tuples() const;

    bool operator==(const CodeSystem&) const = default;
};

// Throws on d outside [1,64], empty/duplicate/out-of-range constituents.
void validate(const CodeSystem& sys);
CodeSystem make_system(int d, std::vector<std::vector<Codeword>> codes, std::string name = {});

// Complements exactly the coordinates set in mask, in every constituent code.
CodeSystem negate_coords(const CodeSystem& sys, Codeword mask);

// Moves bit i to position perm[i] in every codeword; perm must be a
// bijection on {0,...,d-1}.
CodeSystem permute_coords(const CodeSystem& sys, const std::vector<int>& perm);

// Exact average Hamming weight of one constituent code.
Rat average_weight(const std::vector<Codeword>& code);

// (1/d) log2 prod |C_i|.
long double sum_rate_seed(const CodeSystem& sys);

} // namespace udc
