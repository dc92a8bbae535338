#include <doctest.h>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/glue.hpp"
#include "core/normalize.hpp"
#include "core/verify.hpp"

using namespace udc;

namespace {

const CodeSystem& seed(const char* name) { return catalog_get(name).system; }

CodeSystem normalized(const char* name) {
    return normalize_step1(seed(name)).candidates.at(0).system;
}

// n-fold convolution by repeated squaring: an independent route to the same
// distribution as the incremental dynamic program.
WeightDistribution power_by_squaring(const WeightDistribution& base, int n) {
    WeightDistribution result;
    WeightDistribution sq = base;
    bool have = false;
    while (n > 0) {
        if (n & 1) {
            result = have ? result.convolve(sq) : sq;
            have = true;
        }
        n >>= 1;
        if (n) sq = sq.convolve(sq);
    }
    return result;
}

} // namespace

TEST_CASE("log2_product") {
    CHECK(static_cast<double>(log2_product({Int(240)})) == doctest::Approx(7.906890595608519).epsilon(1e-14));
    CHECK(log2_product({Int(1)}) == 0.0L);
    Int big = 1;
    big <<= 100;
    CHECK(log2_product({big}) == 100.0L);
    CHECK_THROWS_AS(log2_product({Int(0)}), Error);
    CHECK_THROWS_AS(log2_product({Int(-2)}), Error);
}

TEST_CASE("T2 record sizes at n=142, g=24") {
    ConstructionResult res = improved_sizes(seed("T2-MO"), {142, {24}});
    CHECK(res.dim == 852);
    CHECK(res.a_size == Int("8641990558666200978324929491589121158633736089542567304275089656344640620325908104628943"
                            "4237651835178925007618503159552927936967532218857841361123838494243901256237056"));
    CHECK(res.b_size == Int("8815980491825700436922663704404496449366122728999750308467775655483970713371926005846949"
                            "5463003173206471379249855511916210200647094055729150343335186945105977885589504"));
    CHECK(res.sizes[0] == res.a_size + res.b_size);
    // |C2*| = band count around mean weight 426, checked against an
    // independently computed convolution route
    Int c2 = Int("81294979370968338909335118648709261307598306486528141648092248748356731907485760618470730140559694174"
                 "2060087579688150821238735908479095122052892619294234308958020535278520");
    CHECK(res.sizes[1] == c2);
    WeightDistribution direct =
        power_by_squaring(WeightDistribution::of_code(seed("T2-MO").codes[1], 6), 142);
    CHECK(direct.band_count(Rat(426 - 24), Rat(426 + 24)) == c2);
    CHECK(format_truncated(construction_rate(res.sizes, res.dim), 9) == "1.318446971");
}

TEST_CASE("published rates reproduce to nine truncated decimals") {
    for (const auto& entry : catalog()) {
        if (!entry.expected) continue;
        ConstructionResult res = improved_sizes(entry.system, {entry.expected->n, entry.expected->g});
        CHECK(format_truncated(construction_rate(res.sizes, res.dim), 9) == entry.expected->rate);
    }
}

TEST_CASE("rate agrees with log2_product within 1e-12") {
    ConstructionResult res = improved_sizes(seed("T6-KM"), {26, {8, 12, 0, 0, 0}});
    CHECK(res.rate == doctest::Approx(static_cast<double>(log2_product(res.sizes)) / res.dim).epsilon(1e-13));
}

TEST_CASE("A*/B* sizes are bounded by the full power") {
    ConstructionResult res = improved_sizes(seed("T6-KM"), {10, {3, 3, 0, 0, 0}});
    Int full = 1;
    for (int k = 0; k < 10; ++k) full *= 4;
    CHECK(res.a_size <= full);
    CHECK(res.b_size <= full);
    CHECK(res.a_size + res.b_size <= 2 * full);
}

TEST_CASE("monotonicity in g") {
    const CodeSystem& sys = seed("T6-KM");
    for (int g2 = 0; g2 < 6; ++g2) {
        ConstructionResult lo = improved_sizes(sys, {8, {g2, 4, 0, 0, 0}});
        ConstructionResult hi = improved_sizes(sys, {8, {g2 + 1, 4, 0, 0, 0}});
        CHECK(hi.sizes[1] >= lo.sizes[1]);
        CHECK(hi.a_size <= lo.a_size);
        CHECK(hi.b_size <= lo.b_size);
    }
}

TEST_CASE("empty band raises empty_constituent") {
    // the normalized Lindstrom pair at n=1, g=0: C2' has weights {0,2}, the
    // band collapses to the mean weight 1
    CHECK_THROWS_WITH_AS(improved_sizes(normalized("lindstrom"), {1, {0}}),
                         doctest::Contains("empty"), Error);
}

TEST_CASE("weight separation certificate") {
    SUBCASE("T2 record parameters have the tight gap") {
        GlueParams params{142, {24}};
        ConstructionResult res = improved_sizes(seed("T2-MO"), params);
        SeparationCertificate cert = weight_separation(seed("T2-MO"), params, res);
        CHECK(cert.a_side_max == 851);
        CHECK(cert.b_side_min == 852);
        CHECK(cert.gap == 1);
    }
    SUBCASE("all-zero g keeps the unit gap") {
        GlueParams params{2, {0, 0, 0, 0, 0}};
        ConstructionResult res = improved_sizes(seed("T6-KM"), params);
        SeparationCertificate cert = weight_separation(seed("T6-KM"), params, res);
        CHECK(cert.gap == 1);
    }
    SUBCASE("T6 record parameters") {
        GlueParams params{26, {8, 12, 0, 0, 0}};
        ConstructionResult res = improved_sizes(seed("T6-KM"), params);
        SeparationCertificate cert = weight_separation(seed("T6-KM"), params, res);
        CHECK(cert.gap >= 1);
    }
}

TEST_CASE("materialize the normalized Lindstrom pair at n=2") {
    CodeSystem norm = normalized("lindstrom");
    CodeSystem glued = materialize_small(norm, {2, {0}});
    CHECK(glued.d == 4);
    CHECK(glued.codes[0] ==
          std::vector<Codeword>{0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15});
    CHECK(glued.codes[1] == std::vector<Codeword>{3, 12});
    CHECK(verify_ud(glued).is_ud);
    ConstructionResult res = improved_sizes(norm, {2, {0}});
    CHECK(res.a_size == 5);
    CHECK(res.b_size == 9);
}

TEST_CASE("materialize the T2 seed at n=2, g=1") {
    ConstructionResult res = improved_sizes(seed("T2-MO"), {2, {1}});
    CHECK(res.a_size == 60);
    CHECK(res.b_size == 116);
    CHECK(res.sizes[1] == 128);
    CodeSystem glued = materialize_small(seed("T2-MO"), {2, {1}});
    CHECK(glued.d == 12);
    CHECK(glued.codes[0].size() == 176);
    CHECK(verify_ud(glued).is_ud);
}

TEST_CASE("materialize rejects oversized requests") {
    CHECK_THROWS_AS(materialize_small(seed("T2-MO"), {2, {1}}, 100), Error);      // guard
    CHECK_THROWS_AS(materialize_small(seed("T2-MO"), {11, {1}}), Error);          // dn > 64
    CHECK_THROWS_AS(materialize_small(normalized("lindstrom"), {1, {0}}), Error); // empty band
}
