#include "core/table1.hpp"

#include <sstream>

#include "core/bounds.hpp"
#include "core/catalog.hpp"
#include "core/glue.hpp"

namespace udc {

namespace {

struct Expected {
    int T;
    const char* name;
    int d_old;
    const char* r_old;
    long d_new;
    const char* r_new;
    const char* r_upper;
};

// d_new = d * n at the published (n, g); for T = 8 this is 6 * 69 = 414.
constexpr Expected kExpected[] = {
    {2, "T2-MO", 6, "1.3178", 852, "1.3184", "1.5000"},
    {3, "T3", 6, "1.5381", 432, "1.5395", "1.8113"},
    {4, "T4-KO", 4, "1.7500", 980, "1.7505", "2.0307"},
    {5, "T5", 4, "1.8962", 896, "1.8970", "2.1982"},
    {6, "T6-KM", 4, "2.0000", 104, "2.0052", "2.3334"},
    {7, "T7-KM", 8, "2.0731", 128, "2.0774", "2.4467"},
    {8, "T8-KM", 6, "2.1666", 414, "2.1683", "2.5442"},
};

} // namespace

Table1Report run_table1() {
    Table1Report report;
    for (const Expected& e : kExpected) {
        const CatalogEntry& entry = catalog_get(e.name);
        Table1Row row;
        row.T = e.T;
        row.name = e.name;
        row.d_old = entry.system.d;
        row.r_old = format_truncated(sum_rate_seed(entry.system), 4);
        GlueParams params{entry.expected->n, entry.expected->g};
        ConstructionResult res = improved_sizes(entry.system, params);
        row.d_new = res.dim;
        row.r_new = format_truncated(construction_rate(res.sizes, res.dim), 4);
        row.r_upper = format_rounded_up(upper_bound(e.T), 4);

        auto check = [&](const std::string& got, const std::string& want, const char* what) {
            if (got != want) {
                row.matches = false;
                if (!row.note.empty()) row.note += "; ";
                row.note += std::string(what) + " " + got + " != " + want;
            }
        };
        check(std::to_string(row.d_old), std::to_string(e.d_old), "d_old");
        check(row.r_old, e.r_old, "R_old");
        check(std::to_string(row.d_new), std::to_string(e.d_new), "d_new");
        check(row.r_new, e.r_new, "R_new");
        check(row.r_upper, e.r_upper, "R_upper");
        if (!row.matches) ++report.mismatches;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string Table1Report::format() const {
    std::ostringstream out;
    out << "  T   d_old   R_old    d_new   R_new    R_upper\n";
    for (const Table1Row& r : rows) {
        out << "  " << r.T << "   " << r.d_old << "       " << r.r_old << "   ";
        std::string dn = std::to_string(r.d_new);
        out << dn << std::string(dn.size() < 6 ? 6 - dn.size() : 1, ' ');
        out << r.r_new << "   " << r.r_upper;
        if (!r.matches) out << "   MISMATCH: " << r.note;
        out << "\n";
    }
    out << (mismatches == 0 ? "all rows match the published values\n"
                            : std::to_string(mismatches) + " row(s) mismatch\n");
    return out.str();
}

} // namespace udc
