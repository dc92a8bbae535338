#include "core/glue.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace udc {

namespace {

void check_params(const CodeSystem& norm, const GlueParams& params) {
    validate(norm);
    if (params.n < 1) fail(errc::invalid_argument, "glue power n must be >= 1");
    if (params.g.size() + 1 != norm.codes.size())
        fail(errc::invalid_argument, "g must have one entry per non-first constituent");
    for (int gi : params.g)
        if (gi < 0) fail(errc::invalid_argument, "g entries must be nonnegative");
}

// Band [n*mean - g, n*mean + g] tightened to integers; mean = W/m exactly.
std::pair<Int, Int> band_bounds(long n, long W, long m, long g) {
    Rat lo(n * W - g * m, m), hi(n * W + g * m, m);
    lo.canonicalize();
    hi.canonicalize();
    return {ceil_rat(lo), floor_rat(hi)};
}

} // namespace

int GlueParams::g_total() const { return std::accumulate(g.begin(), g.end(), 0); }

long double construction_rate(const std::vector<Int>& sizes, long dim) {
    return log2_product(sizes) / dim;
}

ConstructionResult improved_sizes(const CodeSystem& norm, const GlueParams& params,
                                  const std::vector<WeightDistribution>& powers) {
    check_params(norm, params);
    const int T = norm.users();
    const long n = params.n;
    const long dn = static_cast<long>(norm.d) * n;
    const long g = params.g_total();

    ConstructionResult res;
    res.params = params;
    res.dim = dn;

    // A* keeps power words of weight <= dn/2 - g - 1; B* keeps complement-power
    // words of weight >= dn/2 + g, equivalently power words of weight
    // <= dn/2 - g. Both are cumulative counts of the un-reflected power.
    const auto& p1 = powers[0];
    Rat qa(dn - 2 * g - 2, 2), qb(dn - 2 * g, 2);
    qa.canonicalize();
    qb.canonicalize();
    Int a_hi = floor_rat(qa);
    Int b_hi = floor_rat(qb);
    res.a_size = p1.band_count(Int(0), a_hi);
    res.b_size = p1.band_count(Int(0), b_hi);
    res.sizes.push_back(res.a_size + res.b_size);

    for (int i = 1; i < T; ++i) {
        long W = 0;
        for (Codeword w : norm.codes[i]) W += hamming_weight(w);
        auto [lo, hi] = band_bounds(n, W, static_cast<long>(norm.codes[i].size()), params.g[i - 1]);
        res.sizes.push_back(powers[i].band_count(lo, hi));
    }

    for (int i = 0; i < T; ++i)
        if (res.sizes[i] == 0)
            fail(errc::empty_constituent,
                 "constituent " + std::to_string(i + 1) + " is empty at n=" + std::to_string(n) +
                     " (weight band too tight)");
    res.rate = static_cast<double>(construction_rate(res.sizes, dn));
    return res;
}

ConstructionResult improved_sizes(const CodeSystem& norm, const GlueParams& params) {
    check_params(norm, params);
    std::vector<WeightDistribution> powers;
    powers.reserve(norm.codes.size());
    for (const auto& code : norm.codes)
        powers.push_back(WeightDistribution::of_code(code, norm.d).power(params.n));
    return improved_sizes(norm, params, powers);
}

SeparationCertificate weight_separation(const CodeSystem& norm, const GlueParams& params,
                                        const ConstructionResult& result) {
    check_params(norm, params);
    for (const Int& s : result.sizes)
        if (s == 0) fail(errc::invalid_argument, "certificate requires nonzero constituent sizes");
    const long n = params.n;
    const long dn = static_cast<long>(norm.d) * n;
    const long g = params.g_total();

    Rat qa(dn - 2 * g - 2, 2), qb(dn + 2 * g, 2);
    qa.canonicalize();
    qb.canonicalize();
    Int a_max = floor_rat(qa); // largest weight allowed in A*
    Int b_min = ceil_rat(qb);  // smallest weight allowed in B*
    for (size_t i = 1; i < norm.codes.size(); ++i) {
        long W = 0;
        for (Codeword w : norm.codes[i]) W += hamming_weight(w);
        auto [lo, hi] = band_bounds(n, W, static_cast<long>(norm.codes[i].size()), params.g[i - 1]);
        long span = static_cast<long>(norm.d) * n;
        if (hi > span) hi = span;
        if (lo < 0) lo = 0;
        a_max += hi;
        b_min += lo;
    }
    SeparationCertificate cert{a_max, b_min, b_min - a_max};
    if (cert.gap < 1)
        fail(errc::certification_failure, "A*/B* weight ranges overlap (gap " + cert.gap.get_str() + ")");
    return cert;
}

CodeSystem materialize_small(const CodeSystem& norm, const GlueParams& params, std::uint64_t guard) {
    check_params(norm, params);
    const int T = norm.users();
    const long n = params.n;
    const long dn = static_cast<long>(norm.d) * n;
    if (dn > 64) fail(errc::unsupported, "materialization requires d*n <= 64");

    ConstructionResult sizes = improved_sizes(norm, params);
    Int total = 1;
    for (const Int& s : sizes.sizes) total *= s;
    if (total > static_cast<unsigned long>(guard))
        fail(errc::guard_exceeded, "materialized system has " + total.get_str() + " tuples");
    for (const auto& code : norm.codes) {
        Int pow = 1;
        for (long k = 0; k < n; ++k) pow *= static_cast<unsigned long>(code.size());
        if (pow > static_cast<unsigned long>(guard))
            fail(errc::guard_exceeded, "power enumeration exceeds the guard");
    }

    // Concatenations place factor j in bits [j*d, (j+1)*d).
    auto power_words = [&](const std::vector<Codeword>& code, auto&& keep) {
        std::vector<Codeword> out;
        std::vector<size_t> idx(n, 0);
        for (;;) {
            Codeword w = 0;
            for (long j = 0; j < n; ++j) w |= code[idx[j]] << (norm.d * j);
            if (keep(w)) out.push_back(w);
            long j = 0;
            while (j < n && idx[j] + 1 == code.size()) idx[j++] = 0;
            if (j == n) break;
            ++idx[j];
        }
        return out;
    };

    const long g = params.g_total();
    Rat qa(dn - 2 * g - 2, 2), qb(dn + 2 * g, 2);
    qa.canonicalize();
    qb.canonicalize();
    const Int a_hi = floor_rat(qa);
    const Int b_lo = ceil_rat(qb);

    std::vector<Codeword> comp;
    Codeword all_ones = norm.d == 64 ? ~Codeword{0} : (Codeword{1} << norm.d) - 1;
    for (Codeword w : norm.codes[0]) comp.push_back(w ^ all_ones);

    std::vector<std::vector<Codeword>> out_codes;
    std::vector<Codeword> c1 =
        power_words(norm.codes[0], [&](Codeword w) { return Int(hamming_weight(w)) <= a_hi; });
    std::vector<Codeword> b =
        power_words(comp, [&](Codeword w) { return Int(hamming_weight(w)) >= b_lo; });
    c1.insert(c1.end(), b.begin(), b.end());
    out_codes.push_back(std::move(c1));

    for (int i = 1; i < T; ++i) {
        long W = 0;
        for (Codeword w : norm.codes[i]) W += hamming_weight(w);
        auto [lo, hi] = band_bounds(n, W, static_cast<long>(norm.codes[i].size()), params.g[i - 1]);
        out_codes.push_back(power_words(
            norm.codes[i], [&](Codeword w) { return lo <= hamming_weight(w) && Int(hamming_weight(w)) <= hi; }));
    }

    CodeSystem out = make_system(static_cast<int>(dn), std::move(out_codes),
                                 norm.name.empty() ? std::string{} : norm.name + "-glued");
    for (int i = 0; i < T; ++i)
        if (Int(static_cast<unsigned long>(out.codes[i].size())) != sizes.sizes[i])
            fail(errc::certification_failure, "materialized sizes disagree with the band counts");
    return out;
}

} // namespace udc
