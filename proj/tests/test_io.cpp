#include <doctest.h>

#include "core/catalog.hpp"
#include "core/codefile.hpp"
#include "core/error.hpp"
#include "core/table1.hpp"
#include "core/verify.hpp"

using namespace udc;

TEST_CASE("parse the plain-text format") {
    CodeSystem sys = parse_code_file("# pair\nname lindstrom\nd 2\ncode 1 2 3\ncode 0 3\n");
    CHECK(sys == catalog_get("lindstrom").system);
    CHECK(sys.name == "lindstrom");
}

TEST_CASE("parse the JSON format") {
    CodeSystem sys = parse_code_file(R"({"name": "lindstrom", "d": 2, "codes": [[1,2,3],[0,3]]})");
    CHECK(sys == catalog_get("lindstrom").system);
}

TEST_CASE("parse diagnostics carry the position") {
    CHECK_THROWS_WITH_AS(parse_code_file("d 2\ncode 4\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_code_file("d 2\ncode 3 3\n"), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(parse_code_file("code 1\nd 2\n"), doctest::Contains("precede"), Error);
    CHECK_THROWS_WITH_AS(parse_code_file("d 2\ncode x\n"), doctest::Contains("field"), Error);
    CHECK_THROWS_AS(parse_code_file(""), Error);
    CHECK_THROWS_AS(parse_code_file("d 2\n"), Error);
    CHECK_THROWS_AS(parse_code_file(R"({"d": 2})"), Error);
    CHECK_THROWS_AS(parse_code_file(R"({"d": 2, "codes": [[4]]})"), Error);
}

TEST_CASE("round trips") {
    for (const auto& entry : catalog()) {
        CHECK(parse_code_file(serialize_code_system(entry.system)) == entry.system);
        CHECK(parse_code_file(serialize_code_system_json(entry.system)) == entry.system);
    }
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_get("T7-KM").system.d == 8);
    CHECK(catalog_get("T7-KM").system.users() == 7);
    CHECK_THROWS_WITH_AS(catalog_get("bogus"), doctest::Contains("unknown"), Error);
    CHECK(catalog_names().size() == 8);
}

TEST_CASE("every catalog entry is uniquely decodable") {
    for (const auto& entry : catalog()) {
        UDReport rep = verify_ud(entry.system);
        CHECK(rep.is_ud);
    }
}

TEST_CASE("table 1 reproduces with no mismatches") {
    Table1Report report = run_table1();
    CHECK(report.mismatches == 0);
    REQUIRE(report.rows.size() == 7);
    CHECK(report.rows[0].r_old == "1.3178");
    CHECK(report.rows[0].r_new == "1.3184");
    CHECK(report.rows[0].d_new == 852);
    CHECK(report.rows[6].r_old == "2.1666");
    CHECK(report.rows[6].d_new == 414); // 6 * 69 at the published parameters
    CHECK(report.rows[6].r_upper == "2.5442");
}
