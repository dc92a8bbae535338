#pragma once

#include <string>
#include <vector>

namespace udc {

struct Table1Row {
    int T = 0;
    std::string name;
    int d_old = 0;
    std::string r_old;   // truncated to 4 decimals
    long d_new = 0;      // d * n at the published parameters
    std::string r_new;   // truncated to 4 decimals
    std::string r_upper; // rounded up to 4 decimals
    bool matches = true;
    std::string note;    // which fields disagreed with the embedded values
};

struct Table1Report {
    std::vector<Table1Row> rows;
    int mismatches = 0;
    std::string format() const;
};

// Recomputes the summary table of best known bounds for T = 2..8 and checks
// every entry against the embedded expected values.
Table1Report run_table1();

} // namespace udc
