#include <doctest.h>

#include <map>
#include <vector>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/tabu.hpp"
#include "core/verify.hpp"

using namespace udc;

namespace {

// Independent pair-counting oracle: enumerate all unordered tuple pairs.
std::uint64_t brute_force_pairs(const CodeSystem& sys) {
    std::vector<std::vector<int>> sums;
    std::vector<size_t> idx(sys.users(), 0);
    for (;;) {
        std::vector<int> s(sys.d, 0);
        for (int i = 0; i < sys.users(); ++i)
            for (int k = 0; k < sys.d; ++k) s[k] += static_cast<int>(sys.codes[i][idx[i]] >> k & 1);
        sums.push_back(std::move(s));
        int i = 0;
        while (i < sys.users() && idx[i] + 1 == sys.codes[i].size()) idx[i++] = 0;
        if (i == sys.users()) break;
        ++idx[i];
    }
    std::uint64_t pairs = 0;
    for (size_t a = 0; a < sums.size(); ++a)
        for (size_t b = a + 1; b < sums.size(); ++b)
            if (sums[a] == sums[b]) ++pairs;
    return pairs;
}

} // namespace

TEST_CASE("conflict_count") {
    CHECK(conflict_count(catalog_get("lindstrom").system) == 0);
    CHECK(conflict_count(make_system(1, {{0, 1}, {0, 1}})) == 1);
    // one sum of multiplicity 4 and four of multiplicity 2: C(4,2) + 4 = 10
    CodeSystem full = make_system(2, {{0, 1, 2, 3}, {0, 1, 2, 3}});
    CHECK(conflict_count(full) == 10);
    CHECK(conflict_count(full) == brute_force_pairs(full));
}

TEST_CASE("conflict_count matches the pairwise oracle") {
    for (const char* name : {"lindstrom", "T4-KO", "T6-KM"})
        CHECK(conflict_count(catalog_get(name).system) == brute_force_pairs(catalog_get(name).system));
    CodeSystem clash = make_system(3, {{0, 1, 2, 4}, {0, 7}, {1, 6}});
    CHECK(conflict_count(clash) == brute_force_pairs(clash));
}

TEST_CASE("conflicts equal excess tuples when multiplicities stay at two") {
    CodeSystem sys = make_system(1, {{0, 1}, {0, 1}});
    UDReport rep = verify_ud(sys);
    CHECK(Int(static_cast<unsigned long>(conflict_count(sys))) ==
          rep.total_tuples - rep.distinct_sums);
}

TEST_CASE("discovery finds a Lindstrom-shaped pair") {
    DiscoverySpec spec;
    spec.d = 2;
    spec.sizes = {3, 2};
    spec.budget = 10000;
    spec.seed = 1;
    DiscoveryResult res = tabu_search(spec);
    REQUIRE(res.system.has_value());
    CHECK(res.iterations <= 10000);
    UDReport rep = verify_ud(*res.system);
    CHECK(rep.is_ud);
    CHECK(rep.total_tuples == 6);
    CHECK(sum_rate_seed(*res.system) == doctest::Approx(1.2924812503605781).epsilon(1e-9));
}

TEST_CASE("discovery is deterministic for a fixed seed") {
    DiscoverySpec spec;
    spec.d = 2;
    spec.sizes = {3, 2};
    spec.budget = 10000;
    spec.seed = 42;
    DiscoveryResult a = tabu_search(spec);
    DiscoveryResult b = tabu_search(spec);
    REQUIRE(a.system.has_value());
    REQUIRE(b.system.has_value());
    CHECK(a.system->codes == b.system->codes);
    CHECK(a.iterations == b.iterations);
    CHECK(a.restarts == b.restarts);
}

TEST_CASE("impossible shapes report their best conflict count") {
    // the full 1-cube plus any 2-word code always collides
    DiscoverySpec spec;
    spec.d = 1;
    spec.sizes = {2, 2};
    spec.budget = 500;
    spec.seed = 7;
    DiscoveryResult res = tabu_search(spec);
    CHECK_FALSE(res.system.has_value());
    CHECK(res.best_conflicts > 0);
}

TEST_CASE("discovery validates its input") {
    DiscoverySpec spec;
    spec.d = 2;
    spec.sizes = {5, 2}; // 5 > 2^2
    CHECK_THROWS_AS(tabu_search(spec), Error);
    spec.sizes = {3, 0};
    CHECK_THROWS_AS(tabu_search(spec), Error);
}
