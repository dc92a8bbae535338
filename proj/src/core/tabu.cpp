#include "core/tabu.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

#include "core/error.hpp"

namespace udc {

namespace {

constexpr int kRestartStagnation = 2000; // non-improving moves before a restart

std::uint64_t pack_nibbles(Codeword w, int d) {
    std::uint64_t r = 0;
    for (int k = 0; k < d; ++k)
        if (w >> k & 1) r |= std::uint64_t{1} << (4 * k);
    return r;
}

// Sum multiset with an incrementally maintained colliding-pair count.
struct SumTable {
    std::unordered_map<std::uint64_t, std::uint32_t> counts;
    std::uint64_t conflicts = 0;

    void add(std::uint64_t key) { conflicts += counts[key]++; }
    void remove(std::uint64_t key) { conflicts -= --counts[key]; }
    void clear() {
        counts.clear();
        conflicts = 0;
    }
};

struct Move {
    int code = -1;
    int slot = -1;
    Codeword word = 0;
};

} // namespace

DiscoveryResult tabu_search(const DiscoverySpec& spec) {
    if (spec.d < 1 || spec.d > 16) fail(errc::unsupported, "discovery supports 1 <= d <= 16");
    const int T = static_cast<int>(spec.sizes.size());
    if (T < 1 || T > 15) fail(errc::unsupported, "discovery supports 1 to 15 constituent codes");
    const std::uint64_t universe = std::uint64_t{1} << spec.d;
    Int total = 1;
    for (int s : spec.sizes) {
        if (s < 1 || static_cast<std::uint64_t>(s) > universe)
            fail(errc::invalid_argument, "constituent size " + std::to_string(s) + " impossible in dimension " +
                                             std::to_string(spec.d));
        total *= static_cast<unsigned long>(s);
    }
    if (total > static_cast<unsigned long>(spec.guard))
        fail(errc::guard_exceeded, "tuple count " + total.get_str() + " exceeds the enumeration guard");
    if (spec.tenure < 0) fail(errc::invalid_argument, "tenure must be nonnegative");

    std::vector<std::uint64_t> packed(universe);
    for (std::uint64_t w = 0; w < universe; ++w) packed[w] = pack_nibbles(w, spec.d);

    std::vector<std::vector<Codeword>> words(T);
    std::vector<std::vector<char>> used(T, std::vector<char>(universe, 0));
    SumTable table;

    // all sums of one word from each code except `skip`
    auto partials = [&](int skip) {
        std::vector<std::uint64_t> out{0};
        for (int i = 0; i < T; ++i) {
            if (i == skip) continue;
            std::vector<std::uint64_t> next;
            next.reserve(out.size() * words[i].size());
            for (std::uint64_t base : out)
                for (Codeword w : words[i]) next.push_back(base + packed[w]);
            out = std::move(next);
        }
        return out;
    };

    auto rebuild_table = [&] {
        table.clear();
        std::vector<std::uint64_t> all = partials(-1);
        for (std::uint64_t s : all) table.add(s);
    };

    auto snapshot = [&]() {
        std::vector<std::vector<Codeword>> codes = words;
        return make_system(spec.d, std::move(codes), "discovered");
    };

    DiscoveryResult result;
    result.best_conflicts = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::vector<std::uint64_t>> tabu_until(T, std::vector<std::uint64_t>(universe, 0));

    int restart = 0;
    std::uint64_t iter = 0;
    while (iter < spec.budget) {
        std::seed_seq seq{spec.seed, static_cast<std::uint64_t>(restart)};
        std::mt19937_64 rng(seq);
        for (int i = 0; i < T; ++i) {
            words[i].clear();
            std::fill(used[i].begin(), used[i].end(), 0);
            while (static_cast<int>(words[i].size()) < spec.sizes[i]) {
                Codeword w = rng() % universe;
                if (used[i][w]) continue;
                used[i][w] = 1;
                words[i].push_back(w);
            }
        }
        for (auto& row : tabu_until) std::fill(row.begin(), row.end(), 0);
        rebuild_table();
        if (table.conflicts < result.best_conflicts) result.best_conflicts = table.conflicts;
        if (table.conflicts == 0) {
            result.system = snapshot();
            result.iterations = iter;
            result.restarts = restart;
            return result;
        }

        int stagnant = 0;
        while (iter < spec.budget && stagnant < kRestartStagnation) {
            // full-neighborhood scan; ties resolved by scan order
            bool have_move = false, have_fallback = false;
            std::uint64_t move_conf = 0, fallback_conf = 0;
            Move move, fallback;
            for (int i = 0; i < T; ++i) {
                if (static_cast<std::uint64_t>(spec.sizes[i]) == universe) continue; // nothing to swap in
                std::vector<std::uint64_t> part = partials(i);
                for (int j = 0; j < spec.sizes[i]; ++j) {
                    const Codeword old = words[i][j];
                    for (std::uint64_t s : part) table.remove(s + packed[old]);
                    for (std::uint64_t cand = 0; cand < universe; ++cand) {
                        if (used[i][cand]) continue;
                        for (std::uint64_t s : part) table.add(s + packed[cand]);
                        std::uint64_t conf = table.conflicts;
                        for (std::uint64_t s : part) table.remove(s + packed[cand]);
                        bool is_tabu = tabu_until[i][cand] > iter || tabu_until[i][old] > iter;
                        if (is_tabu && conf != 0) { // aspiration: tabu allowed on a win
                            if (!have_fallback || conf < fallback_conf) {
                                have_fallback = true;
                                fallback_conf = conf;
                                fallback = {i, j, cand};
                            }
                            continue;
                        }
                        if (!have_move || conf < move_conf) {
                            have_move = true;
                            move_conf = conf;
                            move = {i, j, cand};
                        }
                    }
                    for (std::uint64_t s : part) table.add(s + packed[old]);
                }
            }
            if (!have_move) {
                if (!have_fallback) { // no admissible move at all
                    ++iter;
                    break;
                }
                move = fallback;
                move_conf = fallback_conf;
            }

            const Codeword old = words[move.code][move.slot];
            std::vector<std::uint64_t> part = partials(move.code);
            for (std::uint64_t s : part) table.remove(s + packed[old]);
            for (std::uint64_t s : part) table.add(s + packed[move.word]);
            used[move.code][old] = 0;
            used[move.code][move.word] = 1;
            words[move.code][move.slot] = move.word;
            tabu_until[move.code][old] = iter + spec.tenure;
            tabu_until[move.code][move.word] = iter + spec.tenure;
            ++iter;

            if (table.conflicts < result.best_conflicts) {
                result.best_conflicts = table.conflicts;
                stagnant = 0;
            } else {
                ++stagnant;
            }
            if (table.conflicts == 0) {
                result.system = snapshot();
                result.iterations = iter;
                result.restarts = restart;
                return result;
            }
        }
        ++restart;
    }
    result.iterations = iter;
    result.restarts = restart;
    return result;
}

} // namespace udc
