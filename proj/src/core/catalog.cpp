#include "core/catalog.hpp"

#include "core/error.hpp"

namespace udc {

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    auto add = [&](const char* name, int d, std::vector<std::vector<Codeword>> codes,
                   std::optional<CatalogExpected> expected) {
        entries.push_back({name, make_system(d, std::move(codes), name), std::move(expected)});
    };

    add("lindstrom", 2, {{1, 2, 3}, {0, 3}}, std::nullopt);
    add("T2-MO", 6,
        {{3, 4, 7, 10, 14, 17, 21, 27, 32, 36, 42, 49, 56, 59, 60},
         {8, 9, 16, 18, 24, 29, 30, 31, 32, 33, 34, 39, 45, 47, 54, 55}},
        CatalogExpected{142, {24}, "1.318446971"});
    add("T3", 6,
        {{3, 4, 7, 24, 27, 28, 32, 35, 36, 56},
         {0, 2, 12, 14, 16, 18, 30, 33, 45, 47, 49, 51, 56, 61, 63},
         {9, 21, 42, 54}},
        CatalogExpected{72, {21, 11}, "1.539572454"});
    add("T4-KO", 4, {{0, 7, 8, 14}, {4, 5, 10, 11}, {2, 6, 9, 13}, {3, 12}},
        CatalogExpected{245, {20, 20, 0}, "1.750590009"});
    add("T5", 4, {{0, 4, 11}, {0, 3, 5, 6, 9, 10, 12, 15}, {1, 14}, {2, 13}, {7, 8}},
        CatalogExpected{224, {30, 30, 30, 30}, "1.897008675"});
    add("T6-KM", 4, {{0, 2, 8, 10}, {1, 2, 13, 14}, {0, 15}, {5, 10}, {3, 12}, {6, 9}},
        CatalogExpected{26, {8, 12, 0, 0, 0}, "2.005264438"});
    add("T7-KM", 8,
        {{0, 2, 8, 10, 32, 34, 40, 42, 128, 130, 136, 138, 160, 162, 168, 170},
         {17, 18, 29, 30, 33, 34, 45, 46, 209, 210, 221, 222, 225, 226, 237, 238},
         {0, 240, 255},
         {15, 240},
         {85, 90, 165, 170},
         {51, 60, 195, 204},
         {102, 105, 150, 153}},
        CatalogExpected{16, {10, 16, 0, 0, 0, 0}, "2.077479836"});
    add("T8-KM", 6,
        {{0, 8, 16, 24, 32, 40, 48, 56},
         {2, 16, 38, 52},
         {0, 63},
         {9, 54},
         {18, 27, 36, 45},
         {21, 28, 35, 42},
         {7, 56},
         {14, 49}},
        CatalogExpected{69, {17, 39, 17, 17, 0, 0, 0}, "2.168328140"});
    return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_get(std::string_view name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e;
    std::string names;
    for (const CatalogEntry& e : catalog()) {
        if (!names.empty()) names += ", ";
        names += e.name;
    }
    fail(errc::unknown_name, "unknown catalog code '" + std::string(name) + "' (known: " + names + ")");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog()) names.push_back(e.name);
    return names;
}

} // namespace udc
