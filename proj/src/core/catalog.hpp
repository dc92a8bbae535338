#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/code_system.hpp"

namespace udc {

// Published parameters of the improved construction for a seed code: power n,
// weight half-widths g_2..g_T, and the resulting rate to 9 truncated decimals.
struct CatalogExpected {
    int n;
    std::vector<int> g;
    std::string rate;
};

struct CatalogEntry {
    std::string name;
    CodeSystem system;
    std::optional<CatalogExpected> expected;
};

// Seed codes: Lindstrom's 2-user pair plus the T = 2..8 systems the new
// records are built from.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_get(std::string_view name); // throws unknown_name

std::vector<std::string> catalog_names();

} // namespace udc
