#include "core/normalize.hpp"

#include <cstdint>

#include "core/error.hpp"

namespace udc {

namespace {

// avg(C ^ mask) = W(mask)/|C| with W maintained incrementally across the
// ascending mask walk: flipping coordinate k changes W by +-(|C| - 2*ones_k).
struct WeightTracker {
    std::int64_t size;
    std::vector<std::int64_t> ones; // per coordinate
    std::int64_t weight;            // total weight under the current mask

    void flip(int k, bool now_set) {
        std::int64_t delta = size - 2 * ones[k];
        weight += now_set ? delta : -delta;
    }
};

// a/b < c/d over nonnegative 64-bit totals; products stay below 2^63 for d <= 24.
bool frac_less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return a * d < c * b;
}

} // namespace

NormalizationResult normalize_step1(const CodeSystem& sys) {
    validate(sys);
    if (sys.d > 24) fail(errc::unsupported, "normalization enumerates 2^d masks; d <= 24 required");
    const int T = sys.users();
    std::vector<WeightTracker> tr(T);
    for (int i = 0; i < T; ++i) {
        tr[i].size = static_cast<std::int64_t>(sys.codes[i].size());
        tr[i].ones.assign(sys.d, 0);
        tr[i].weight = 0;
        for (Codeword w : sys.codes[i]) {
            tr[i].weight += hamming_weight(w);
            for (int k = 0; k < sys.d; ++k) tr[i].ones[k] += w >> k & 1;
        }
    }

    std::int64_t best_num = tr[0].weight, best_den = tr[0].size;
    std::vector<std::pair<Codeword, int>> optima;
    bool truncated = false;
    const Codeword mask_end = Codeword{1} << sys.d;
    Codeword prev = 0;
    for (Codeword mask = 0; mask < mask_end; ++mask) {
        Codeword diff = mask ^ prev;
        for (int k = 0; diff >> k; ++k)
            if (diff >> k & 1)
                for (auto& t : tr) t.flip(k, mask >> k & 1);
        prev = mask;
        for (int i = 0; i < T; ++i) {
            if (frac_less(tr[i].weight, tr[i].size, best_num, best_den)) {
                best_num = tr[i].weight;
                best_den = tr[i].size;
                optima.clear();
                truncated = false;
            }
            if (tr[i].weight * best_den == best_num * tr[i].size) {
                if (optima.size() < kNormalizationCandidateCap) optima.emplace_back(mask, i);
                else truncated = true;
            }
        }
    }

    NormalizationResult result;
    result.min_average_weight = Rat(best_num, best_den);
    result.min_average_weight.canonicalize();
    result.truncated = truncated;
    for (auto [mask, idx] : optima) {
        NormalizationCandidate cand;
        cand.mask = mask;
        cand.code_order.push_back(idx);
        for (int j = 0; j < T; ++j)
            if (j != idx) cand.code_order.push_back(j);
        CodeSystem negated = negate_coords(sys, mask);
        CodeSystem reordered;
        reordered.d = sys.d;
        reordered.name = sys.name;
        for (int j : cand.code_order) reordered.codes.push_back(negated.codes[j]);
        cand.system = std::move(reordered);
        result.candidates.push_back(std::move(cand));
    }
    return result;
}

} // namespace udc
