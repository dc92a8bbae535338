#include "core/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "core/error.hpp"

namespace udc {

namespace {

constexpr double kNearWindow = 1e-9;   // float pre-screen around the running best
constexpr double kTieTolerance = 1e-12;
constexpr size_t kNearCompactLimit = 1 << 16;
constexpr size_t kNearHardLimit = 1 << 20;

struct Group {
    std::vector<int> members; // 0-based constituent indices, all >= 1
    bool pinned = false;
    double sigma = 0;
};

struct NearPoint {
    double rate;
    int n;
    std::vector<int> g; // full vector, g[i-1] for constituent i
};

long weight_total(const std::vector<Codeword>& code) {
    long W = 0;
    for (Codeword w : code) W += hamming_weight(w);
    return W;
}

// Smallest g for which the band covers the whole support of the n-fold power;
// larger caps cannot change any count.
int saturation_cap(const std::vector<Codeword>& code, int n) {
    long W = weight_total(code);
    long m = static_cast<long>(code.size());
    int lo = hamming_weight(code.front()), hi = lo;
    for (Codeword w : code) {
        lo = std::min(lo, hamming_weight(w));
        hi = std::max(hi, hamming_weight(w));
    }
    Rat reach_low(static_cast<long>(n) * W - static_cast<long>(n) * lo * m, m);
    Rat reach_high(static_cast<long>(n) * hi * m - static_cast<long>(n) * W, m);
    reach_low.canonicalize();
    reach_high.canonicalize();
    Int s = ceil_rat(reach_low > reach_high ? reach_low : reach_high);
    return static_cast<int>(mpz_get_si(s.get_mpz_t()));
}

std::vector<Group> resolve_groups(const CodeSystem& norm, const SearchConfig& config) {
    const int T = norm.users();
    std::vector<int> owner(T, -1);
    std::vector<Group> groups;
    auto claim = [&](int idx1) {
        if (idx1 < 2 || idx1 > T)
            fail(errc::invalid_argument, "group index " + std::to_string(idx1) + " outside 2..T");
        if (owner[idx1 - 1] != -1)
            fail(errc::invalid_argument, "constituent " + std::to_string(idx1) + " assigned twice");
        owner[idx1 - 1] = static_cast<int>(groups.size());
    };
    for (const auto& members : config.groups) {
        Group grp;
        for (int idx1 : members) {
            claim(idx1);
            grp.members.push_back(idx1 - 1);
        }
        if (grp.members.empty()) fail(errc::invalid_argument, "empty search group");
        std::sort(grp.members.begin(), grp.members.end());
        groups.push_back(std::move(grp));
    }
    for (int idx1 : config.zero_fixed) {
        claim(idx1);
        Group grp;
        grp.members = {idx1 - 1};
        grp.pinned = true;
        groups.push_back(std::move(grp));
    }
    for (int i = 1; i < T; ++i)
        if (owner[i] == -1) fail(errc::invalid_argument, "constituent " + std::to_string(i + 1) +
                                                             " missing from groups/zero_fixed");
    for (auto& grp : groups) {
        Moments m = WeightDistribution::of_code(norm.codes[grp.members.front()], norm.d).moments();
        grp.sigma = std::sqrt(m.variance.get_d());
    }
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return a.members.front() < b.members.front(); });
    return groups;
}

} // namespace

SearchConfig symmetry_groups(const CodeSystem& norm) {
    validate(norm);
    SearchConfig config;
    std::map<std::vector<Int>, size_t> seen;
    for (int i = 1; i < norm.users(); ++i) {
        WeightDistribution dist = WeightDistribution::of_code(norm.codes[i], norm.d);
        if (dist.moments().variance == 0) {
            config.zero_fixed.push_back(i + 1);
            continue;
        }
        auto [it, fresh] = seen.emplace(dist.counts(), config.groups.size());
        if (fresh) config.groups.push_back({i + 1});
        else config.groups[it->second].push_back(i + 1);
    }
    return config;
}

SearchOutcome search(const CodeSystem& norm, const SearchConfig& config) {
    validate(norm);
    if (config.n_max < 1) fail(errc::invalid_argument, "n_max must be >= 1");
    const int T = norm.users();
    const int d = norm.d;
    Rat half(d, 2);
    half.canonicalize();
    if (average_weight(norm.codes[0]) == half)
        fail(errc::balanced_seed, "first constituent has average weight d/2; the construction cannot improve");

    std::vector<Group> groups = resolve_groups(norm, config);
    const size_t K = groups.size();

    std::vector<WeightDistribution> base;
    base.reserve(T);
    for (const auto& code : norm.codes) base.push_back(WeightDistribution::of_code(code, d));
    std::vector<long> W(T), m(T);
    for (int i = 0; i < T; ++i) {
        W[i] = weight_total(norm.codes[i]);
        m[i] = static_cast<long>(norm.codes[i].size());
    }

    std::vector<WeightDistribution> cur;
    std::vector<NearPoint> near;
    double best_float = -std::numeric_limits<double>::infinity();
    bool tie_overflow = false;
    bool cap_hit = false;
    std::uint64_t evaluated = 0;

    auto compact_near = [&] {
        std::erase_if(near, [&](const NearPoint& p) { return p.rate < best_float - kNearWindow; });
        if (near.size() > kNearHardLimit) {
            tie_overflow = true;
            near.resize(kNearHardLimit);
        }
    };

    for (int n = 1; n <= config.n_max; ++n) {
        if (n == 1) cur = base;
        else
            for (int i = 0; i < T; ++i) cur[i] = cur[i].convolve(base[i]);
        const long dn = static_cast<long>(d) * n;
        std::vector<std::vector<Int>> pref(T);
        for (int i = 0; i < T; ++i) pref[i] = prefix_sums(cur[i]);
        auto cumulative = [&](int i, const Int& hi) -> const Int& {
            static const Int zero(0);
            if (hi < 0) return zero;
            long idx = hi > cur[i].span() ? cur[i].span() : static_cast<long>(mpz_get_si(hi.get_mpz_t()));
            return pref[i][idx + 1];
        };

        std::vector<int> caps(K, 0);
        std::vector<int> sat(K, 0);
        for (size_t j = 0; j < K; ++j) {
            if (groups[j].pinned) continue;
            sat[j] = saturation_cap(norm.codes[groups[j].members.front()], n);
            if (config.g_cap) caps[j] = *config.g_cap;
            else caps[j] = std::min(std::max(1, static_cast<int>(std::ceil(3.0 * groups[j].sigma * std::sqrt(n)))),
                                    sat[j]);
        }

        for (;;) { // repeated when an auto cap expands
            // per-group log2 band counts for each admissible shared g value
            std::vector<std::vector<double>> tab(K);
            for (size_t j = 0; j < K; ++j) {
                tab[j].assign(caps[j] + 1, -std::numeric_limits<double>::infinity());
                for (int gv = 0; gv <= caps[j]; ++gv) {
                    double acc = 0;
                    bool ok = true;
                    for (int i : groups[j].members) {
                        Rat lo(static_cast<long>(n) * W[i] - static_cast<long>(gv) * m[i], m[i]);
                        Rat hi(static_cast<long>(n) * W[i] + static_cast<long>(gv) * m[i], m[i]);
                        lo.canonicalize();
                        hi.canonicalize();
                        Int cnt = cumulative(i, floor_rat(hi)) - cumulative(i, ceil_rat(lo) - 1);
                        if (cnt == 0) {
                            ok = false;
                            break;
                        }
                        acc += static_cast<double>(log2_int(cnt));
                    }
                    if (ok) tab[j][gv] = acc;
                }
            }
            long cap_total = 0;
            for (size_t j = 0; j < K; ++j) cap_total += static_cast<long>(caps[j]) * groups[j].members.size();
            std::vector<double> c1tab(cap_total + 1, -std::numeric_limits<double>::infinity());
            for (long G = 0; G <= cap_total; ++G) {
                Rat qa(dn - 2 * G - 2, 2), qb(dn - 2 * G, 2);
                qa.canonicalize();
                qb.canonicalize();
                Int c1 = cumulative(0, floor_rat(qa)) + cumulative(0, floor_rat(qb));
                if (c1 > 0) c1tab[G] = static_cast<double>(log2_int(c1));
            }

            // depth-first scan over group assignments
            std::vector<int> assign(K, 0);
            double best_n = -std::numeric_limits<double>::infinity();
            std::vector<int> best_assign(K, 0);
            auto leaf = [&](double logs, long G) {
                ++evaluated;
                double total = logs + c1tab[G];
                if (!(total > -std::numeric_limits<double>::infinity())) return;
                double rate = total / static_cast<double>(dn);
                if (rate > best_n) {
                    best_n = rate;
                    best_assign = assign;
                }
                if (rate >= best_float - kNearWindow) {
                    NearPoint p;
                    p.rate = rate;
                    p.n = n;
                    p.g.assign(T - 1, 0);
                    for (size_t j = 0; j < K; ++j)
                        for (int i : groups[j].members) p.g[i - 1] = assign[j];
                    near.push_back(std::move(p));
                    if (rate > best_float) best_float = rate;
                    if (near.size() > kNearCompactLimit) compact_near();
                }
            };
            auto scan = [&](auto&& self, size_t j, double logs, long G) -> void {
                if (j == K) {
                    leaf(logs, G);
                    return;
                }
                for (int gv = 0; gv <= caps[j]; ++gv) {
                    assign[j] = gv;
                    self(self, j + 1, logs + tab[j][gv], G + static_cast<long>(gv) * groups[j].members.size());
                }
            };
            scan(scan, 0, 0.0, 0);

            bool expanded = false;
            if (!config.g_cap) {
                for (size_t j = 0; j < K; ++j) {
                    if (!groups[j].pinned && best_assign[j] == caps[j] && caps[j] < sat[j]) {
                        caps[j] = std::min(std::max(caps[j] * 2, caps[j] + 8), sat[j]);
                        expanded = true;
                    }
                }
            } else {
                for (size_t j = 0; j < K; ++j)
                    if (!groups[j].pinned && best_assign[j] == caps[j] && caps[j] < sat[j]) cap_hit = true;
            }
            if (!expanded) break;
        }
        if (config.progress) config.progress(n, config.n_max);
    }

    compact_near();
    if (near.empty())
        fail(errc::empty_constituent, "no admissible (n, g) point: every weight band was empty");

    // exact re-evaluation of the near-best points
    std::sort(near.begin(), near.end(), [](const NearPoint& a, const NearPoint& b) {
        return std::tie(a.n, a.g) < std::tie(b.n, b.g);
    });
    near.erase(std::unique(near.begin(), near.end(),
                           [](const NearPoint& a, const NearPoint& b) { return a.n == b.n && a.g == b.g; }),
               near.end());

    struct ExactPoint {
        long double rate;
        ConstructionResult result;
    };
    std::vector<ExactPoint> exact;
    exact.reserve(near.size());
    cur.clear();
    size_t pos = 0;
    for (int n = 1; n <= near.back().n && pos < near.size(); ++n) {
        if (n == 1) cur = base;
        else
            for (int i = 0; i < T; ++i) cur[i] = cur[i].convolve(base[i]);
        while (pos < near.size() && near[pos].n == n) {
            GlueParams params{n, near[pos].g};
            ConstructionResult res = improved_sizes(norm, params, cur);
            exact.push_back({construction_rate(res.sizes, res.dim), std::move(res)});
            ++pos;
        }
    }

    size_t best_idx = 0;
    for (size_t i = 1; i < exact.size(); ++i)
        if (exact[i].rate > exact[best_idx].rate) best_idx = i;
    // smallest n, then lexicographically smallest g among exact equals
    for (size_t i = 0; i < exact.size(); ++i) {
        if (i == best_idx || exact[i].rate != exact[best_idx].rate) continue;
        auto key = [](const ExactPoint& p) { return std::tie(p.result.params.n, p.result.params.g); };
        if (key(exact[i]) < key(exact[best_idx])) best_idx = i;
    }

    SearchOutcome outcome;
    outcome.evaluated = evaluated;
    outcome.tie_overflow = tie_overflow;
    outcome.cap_hit = cap_hit;
    for (size_t i = 0; i < exact.size(); ++i) {
        if (i == best_idx) continue;
        if (std::abs(static_cast<double>(exact[i].rate - exact[best_idx].rate)) <= kTieTolerance)
            outcome.ties.push_back(exact[i].result.params);
    }
    outcome.best = std::move(exact[best_idx].result);
    outcome.best.rate = static_cast<double>(exact[best_idx].rate);
    return outcome;
}

} // namespace udc
