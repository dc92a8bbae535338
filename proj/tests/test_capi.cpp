#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "udcode.h"

namespace {

struct Str {
    char* value = nullptr;
    ~Str() { udc_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

} // namespace

TEST_CASE("parse, verify and free through the C API") {
    udc_system* sys = nullptr;
    REQUIRE(udc_system_parse("d 2\ncode 1 2 3\ncode 0 3\n", &sys) == UDC_OK);
    CHECK(udc_system_dimension(sys) == 2);
    CHECK(udc_system_code_count(sys) == 2);
    CHECK(udc_system_code_size(sys, 0) == 3);
    int is_ud = 0;
    Str total, distinct, witness;
    REQUIRE(udc_verify(sys, 0, &is_ud, &total.value, &distinct.value, &witness.value) == UDC_OK);
    CHECK(is_ud == 1);
    CHECK(total.str() == "6");
    CHECK(distinct.str() == "6");
    CHECK(witness.value == nullptr);
    udc_system_free(sys);
}

TEST_CASE("witness text on a colliding system") {
    udc_system* sys = nullptr;
    REQUIRE(udc_system_parse("d 1\ncode 0 1\ncode 0 1\n", &sys) == UDC_OK);
    int is_ud = 1;
    Str witness;
    REQUIRE(udc_verify(sys, 0, &is_ud, nullptr, nullptr, &witness.value) == UDC_OK);
    CHECK(is_ud == 0);
    CHECK(witness.str().find("sum to [1]") != std::string::npos);
    udc_system_free(sys);
}

TEST_CASE("error reporting") {
    udc_system* sys = nullptr;
    CHECK(udc_system_parse("d 2\ncode 4\n", &sys) == UDC_ERROR_RANGE);
    CHECK(std::string(udc_last_error()).find("dimension") != std::string::npos);
    CHECK(udc_system_parse("d 2\ncode 3 3\n", &sys) == UDC_ERROR_DUPLICATE);
    CHECK(udc_system_from_catalog("bogus", &sys) == UDC_ERROR_UNKNOWN_NAME);
}

TEST_CASE("catalog, normalization and the glued construction") {
    udc_system* sys = nullptr;
    REQUIRE(udc_system_from_catalog("T6-KM", &sys) == UDC_OK);

    udc_normalization* norm = nullptr;
    REQUIRE(udc_normalize(sys, &norm) == UDC_OK);
    CHECK(udc_normalization_count(norm) == 4);
    Str avg;
    REQUIRE(udc_normalization_min_average_weight(norm, &avg.value) == UDC_OK);
    CHECK(avg.str() == "1");
    uint64_t mask = 123;
    REQUIRE(udc_normalization_mask(norm, 0, &mask) == UDC_OK);
    CHECK(mask == 0);

    udc_system* first = nullptr;
    REQUIRE(udc_normalization_system(norm, 0, &first) == UDC_OK);
    std::vector<int> g{8, 12, 0, 0, 0};
    udc_construction* c = nullptr;
    REQUIRE(udc_improve(first, 26, g.data(), 5, &c) == UDC_OK);
    CHECK(udc_construction_dim(c) == 104);
    Str rate;
    REQUIRE(udc_construction_rate_string(c, 9, &rate.value) == UDC_OK);
    CHECK(rate.str() == "2.005264438");
    Str a, b;
    REQUIRE(udc_construction_ab(c, &a.value, &b.value) == UDC_OK);
    CHECK(a.str() == "4219091305593032");
    CHECK(b.str() == "4345085933487167");

    Str amax, bmin, gap;
    REQUIRE(udc_weight_separation(first, 26, g.data(), 5, &amax.value, &bmin.value, &gap.value) ==
            UDC_OK);
    CHECK(gap.str() == "1");

    udc_construction_free(c);
    udc_system_free(first);
    udc_normalization_free(norm);
    udc_system_free(sys);
}

TEST_CASE("empty bands surface as a status code") {
    udc_system* sys = nullptr;
    REQUIRE(udc_system_parse("d 2\ncode 0 1 2\ncode 0 3\n", &sys) == UDC_OK);
    int g0 = 0;
    udc_construction* c = nullptr;
    CHECK(udc_improve(sys, 1, &g0, 1, &c) == UDC_ERROR_EMPTY_CONSTITUENT);
    udc_system_free(sys);
}

TEST_CASE("search through the C API") {
    udc_system* sys = nullptr;
    REQUIRE(udc_system_from_catalog("T4-KO", &sys) == UDC_OK);
    udc_search_result* result = nullptr;
    REQUIRE(udc_search(sys, 1, 0, nullptr, nullptr, 0, &result) == UDC_OK);
    int n = 0, g_len = 0;
    std::vector<int> g(4);
    double rate = 0;
    REQUIRE(udc_search_best(result, &n, g.data(), 4, &g_len, &rate) == UDC_OK);
    CHECK(n == 1);
    CHECK(g_len == 3);
    CHECK(rate == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(udc_search_tie_count(result) == 0);
    udc_search_result_free(result);
    udc_system_free(sys);
}

TEST_CASE("spectrum and moments") {
    udc_system* sys = nullptr;
    REQUIRE(udc_system_from_catalog("T2-MO", &sys) == UDC_OK);
    Str text;
    REQUIRE(udc_spectrum(sys, 0, 1, &text.value) == UDC_OK);
    CHECK(text.str() == "1 2\n2 4\n3 6\n4 2\n5 1\n");
    Str mean, variance;
    double rho3 = 0;
    int has_rho3 = 0;
    REQUIRE(udc_moments(sys, 0, 1, &mean.value, &variance.value, &rho3, &has_rho3) == UDC_OK);
    CHECK(mean.str() == "41/15");
    CHECK(has_rho3 == 1);
    udc_system_free(sys);
}

TEST_CASE("bounds and analysis") {
    double value = 0;
    REQUIRE(udc_upper_bound(2, &value) == UDC_OK);
    CHECK(value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(udc_upper_bound(0, &value) == UDC_ERROR_INVALID_ARGUMENT);

    udc_system* sys = nullptr;
    REQUIRE(udc_system_from_catalog("lindstrom", &sys) == UDC_OK);
    udc_normalization* norm = nullptr;
    REQUIRE(udc_normalize(sys, &norm) == UDC_OK);
    udc_system* first = nullptr;
    REQUIRE(udc_normalization_system(norm, 0, &first) == UDC_OK);
    Str kappa;
    REQUIRE(udc_guarantee_kappa(first, &kappa.value) == UDC_OK);
    CHECK(kappa.str() == "1/6");
    int n0 = 0;
    REQUIRE(udc_first_improving_n(first, 1000000, &n0) == UDC_OK);
    CHECK(n0 == 132);
    Str report;
    REQUIRE(udc_analyze(first, 1000, &report.value) == UDC_OK);
    CHECK(report.str().find("kappa = 1/6") != std::string::npos);
    udc_system_free(first);
    udc_normalization_free(norm);
    udc_system_free(sys);
}

TEST_CASE("discovery through the C API") {
    std::vector<int> sizes{3, 2};
    int found = 0;
    udc_system* sys = nullptr;
    uint64_t iterations = 0, best = 0;
    REQUIRE(udc_discover(2, sizes.data(), 2, 10000, -1, 1, &found, &sys, &iterations, &best) ==
            UDC_OK);
    CHECK(found == 1);
    REQUIRE(sys != nullptr);
    int is_ud = 0;
    REQUIRE(udc_verify(sys, 0, &is_ud, nullptr, nullptr, nullptr) == UDC_OK);
    CHECK(is_ud == 1);
    udc_system_free(sys);
}

TEST_CASE("table 1 through the C API") {
    Str text;
    int mismatches = -1;
    REQUIRE(udc_table1(&text.value, &mismatches) == UDC_OK);
    CHECK(mismatches == 0);
    CHECK(text.str().find("2.1683") != std::string::npos);
}
