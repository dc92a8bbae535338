#include "core/code_system.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace udc {

Int CodeSystem::total_tuples() const {
    Int t = 1;
    for (const auto& c : codes) t *= static_cast<unsigned long>(c.size());
    return t;
}

void validate(const CodeSystem& sys) {
    if (sys.d < 1 || sys.d > 64) fail(errc::range, "dimension must be in [1, 64]");
    if (sys.codes.empty()) fail(errc::invalid_argument, "system has no constituent codes");
    for (size_t i = 0; i < sys.codes.size(); ++i) {
        const auto& c = sys.codes[i];
        if (c.empty()) fail(errc::invalid_argument, "constituent code " + std::to_string(i + 1) + " is empty");
        for (Codeword w : c) {
            if (sys.d < 64 && w >= (Codeword{1} << sys.d))
                fail(errc::range, "codeword " + std::to_string(w) + " does not fit in dimension " +
                                      std::to_string(sys.d) + " (code " + std::to_string(i + 1) + ")");
        }
        for (size_t j = 1; j < c.size(); ++j)
            if (c[j] == c[j - 1])
                fail(errc::duplicate, "duplicate codeword " + std::to_string(c[j]) + " in code " +
                                          std::to_string(i + 1));
    }
}

CodeSystem make_system(int d, std::vector<std::vector<Codeword>> codes, std::string name) {
    CodeSystem sys;
    sys.d = d;
    sys.name = std::move(name);
    sys.codes = std::move(codes);
    for (auto& c : sys.codes) std::sort(c.begin(), c.end());
    validate(sys);
    return sys;
}

CodeSystem negate_coords(const CodeSystem& sys, Codeword mask) {
    if (sys.d < 64 && mask >= (Codeword{1} << sys.d)) fail(errc::range, "negation mask does not fit in dimension");
    CodeSystem out = sys;
    for (auto& c : out.codes) {
        for (Codeword& w : c) w ^= mask;
        std::sort(c.begin(), c.end());
    }
    return out;
}

CodeSystem permute_coords(const CodeSystem& sys, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != sys.d) fail(errc::invalid_argument, "permutation length != d");
    std::vector<bool> seen(sys.d, false);
    for (int p : perm) {
        if (p < 0 || p >= sys.d || seen[p]) fail(errc::invalid_argument, "not a permutation of the coordinates");
        seen[p] = true;
    }
    CodeSystem out = sys;
    for (auto& c : out.codes) {
        for (Codeword& w : c) {
            Codeword r = 0;
            for (int i = 0; i < sys.d; ++i)
                if (w >> i & 1) r |= Codeword{1} << perm[i];
            w = r;
        }
        std::sort(c.begin(), c.end());
    }
    return out;
}

Rat average_weight(const std::vector<Codeword>& code) {
    unsigned long total = 0;
    for (Codeword w : code) total += hamming_weight(w);
    Rat q(total, static_cast<unsigned long>(code.size()));
    q.canonicalize();
    return q;
}

long double sum_rate_seed(const CodeSystem& sys) {
    std::vector<Int> sizes;
    sizes.reserve(sys.codes.size());
    for (const auto& c : sys.codes) sizes.emplace_back(static_cast<unsigned long>(c.size()));
    return log2_product(sizes) / sys.d;
}

} // namespace udc
