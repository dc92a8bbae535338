// Command-line front end; talks to the library exclusively through the C API.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udcode.h"

namespace {

constexpr int kExitNegative = 1; // not UD / mismatch / not found
constexpr int kExitUsage = 2;

struct StringOut {
    char* value = nullptr;
    ~StringOut() { udc_string_free(value); }
    char** operator&() { return &value; }
    std::string str() const { return value ? value : ""; }
    bool present() const { return value != nullptr; }
};

[[noreturn]] void die(udc_status status) {
    std::cerr << "error: " << udc_last_error() << "\n";
    std::exit(status == UDC_ERROR_PARSE || status == UDC_ERROR_INVALID_ARGUMENT ||
                      status == UDC_ERROR_RANGE || status == UDC_ERROR_DUPLICATE ||
                      status == UDC_ERROR_UNKNOWN_NAME
                  ? kExitUsage
                  : kExitNegative);
}

void check(udc_status status) {
    if (status != UDC_OK) die(status);
}

using SystemPtr = std::unique_ptr<udc_system, decltype(&udc_system_free)>;

SystemPtr wrap(udc_system* sys) { return SystemPtr(sys, &udc_system_free); }

// `spec` is either a catalog name prefixed with '@' or a file path.
SystemPtr load_system(const std::string& spec) {
    udc_system* sys = nullptr;
    if (!spec.empty() && spec[0] == '@') {
        check(udc_system_from_catalog(spec.c_str() + 1, &sys));
        return wrap(sys);
    }
    std::ifstream in(spec);
    if (!in) {
        std::cerr << "error: cannot open '" << spec << "'\n";
        std::exit(kExitUsage);
    }
    std::ostringstream text;
    text << in.rdbuf();
    check(udc_system_parse(text.str().c_str(), &sys));
    return wrap(sys);
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            std::cerr << "error: '" << item << "' is not an integer\n";
            std::exit(kExitUsage);
        }
    }
    return out;
}

SystemPtr normalize_first(const udc_system* sys, bool verbose) {
    udc_normalization* norm = nullptr;
    check(udc_normalize(sys, &norm));
    std::unique_ptr<udc_normalization, decltype(&udc_normalization_free)> guard(norm,
                                                                                &udc_normalization_free);
    uint64_t mask = 0;
    check(udc_normalization_mask(norm, 0, &mask));
    std::vector<int> order(udc_system_code_count(sys));
    int order_len = 0;
    check(udc_normalization_order(norm, 0, order.data(), static_cast<int>(order.size()), &order_len));
    if (verbose) {
        StringOut avg;
        check(udc_normalization_min_average_weight(norm, &avg));
        std::cout << "normalization: mask=" << mask << " order=(";
        for (int i = 0; i < order_len; ++i) std::cout << (i ? "," : "") << order[i] + 1;
        std::cout << ") min average weight " << avg.str() << "\n";
    }
    udc_system* out = nullptr;
    check(udc_normalization_system(norm, 0, &out));
    return wrap(out);
}

void print_construction(const udc_construction* c, int precision) {
    std::cout << "dimension " << udc_construction_dim(c) << "\n";
    for (int i = 0; i < udc_construction_size_count(c); ++i) {
        StringOut size;
        check(udc_construction_size(c, i, &size));
        std::cout << "|C" << i + 1 << "*| = " << size.str() << "\n";
    }
    StringOut a, b;
    check(udc_construction_ab(c, &a, &b));
    std::cout << "|A*| = " << a.str() << "\n|B*| = " << b.str() << "\n";
    StringOut rate;
    check(udc_construction_rate_string(c, precision, &rate));
    std::cout << "rate " << rate.str() << " (truncated to " << precision << " decimals)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and construction of uniquely decodable codes "
                 "for the T-user binary adder channel"};
    app.require_subcommand(1);
    int precision = 9;
    app.add_option("--precision", precision, "printed rate decimals (truncated)")
        ->capture_default_str();

    std::string file;
    uint64_t guard = 0;

    auto* verify = app.add_subcommand("verify", "exhaustively check unique decodability");
    verify->add_option("code", file, "code file or @catalog-name")->required();
    verify->add_option("--guard", guard, "tuple enumeration limit (default 1e8)");

    auto* normalize = app.add_subcommand("normalize", "minimize the least constituent average weight");
    normalize->add_option("code", file, "code file or @catalog-name")->required();
    bool emit = false;
    normalize->add_flag("--emit", emit, "print the first normalized system as a code file");

    auto* spectrum = app.add_subcommand("spectrum", "exact weight distribution of a constituent power");
    spectrum->add_option("code", file, "code file or @catalog-name")->required();
    int code_index = 1;
    int power_n = 1;
    spectrum->add_option("--code-index", code_index, "constituent (1-based)")->capture_default_str();
    spectrum->add_option("--power", power_n, "tensor power n")->capture_default_str();

    auto* moments = app.add_subcommand("moments", "exact mean/variance and rho3 of a constituent power");
    moments->add_option("code", file, "code file or @catalog-name")->required();
    moments->add_option("--code-index", code_index, "constituent (1-based)")->capture_default_str();
    moments->add_option("--power", power_n, "tensor power n")->capture_default_str();

    auto* improve = app.add_subcommand("improve", "evaluate the glued construction at given (n, g)");
    improve->add_option("code", file, "code file or @catalog-name")->required();
    int glue_n = 1;
    std::string g_csv;
    improve->add_option("--n", glue_n, "tensor power")->required();
    improve->add_option("--g", g_csv, "comma-separated g_2..g_T")->required();
    bool no_normalize = false;
    improve->add_flag("--no-normalize", no_normalize, "treat the input as already normalized");

    auto* search = app.add_subcommand("search", "exhaustive rate maximization over (n, g)");
    search->add_option("code", file, "code file or @catalog-name")->required();
    int nmax = 1;
    int gmax = -1;
    std::string groups_spec, pins_spec;
    bool all_normalizations = false;
    search->add_option("--nmax", nmax, "largest tensor power to try")->required();
    search->add_option("--gmax", gmax, "fixed per-index cap on g (default: auto, expanding)");
    search->add_option("--groups", groups_spec, "tied indices, e.g. \"2,3;4,5\" (default: symmetry)");
    search->add_option("--pins", pins_spec, "indices with g fixed to 0, e.g. \"6,7\"");
    search->add_flag("--all-normalizations", all_normalizations,
                     "run the search from every optimal normalization, not just the first");

    auto* bounds = app.add_subcommand("bounds", "entropy upper bound on the sum rate");
    int bound_T = 2;
    bounds->add_option("--T", bound_T, "number of users")->required();

    auto* analyze = app.add_subcommand("analyze", "moments, guarantee constants, first improving n");
    analyze->add_option("code", file, "code file or @catalog-name")->required();
    int n_limit = 1000000;
    analyze->add_option("--limit", n_limit, "largest n to scan")->capture_default_str();
    analyze->add_flag("--no-normalize", no_normalize, "treat the input as already normalized");

    auto* discover = app.add_subcommand("discover", "tabu search for a UD system of a given shape");
    int disc_d = 2;
    std::string sizes_csv;
    uint64_t budget = 100000;
    uint64_t seed = 1;
    int tenure = 8;
    std::string out_file;
    discover->add_option("--d", disc_d, "dimension")->required();
    discover->add_option("--sizes", sizes_csv, "comma-separated constituent sizes")->required();
    discover->add_option("--budget", budget, "move budget")->capture_default_str();
    discover->add_option("--seed", seed, "random seed")->capture_default_str();
    discover->add_option("--tenure", tenure, "tabu tenure")->capture_default_str();
    discover->add_option("--out", out_file, "write the found system to this file");

    auto* catalog_cmd = app.add_subcommand("catalog", "list or print the built-in seed codes");
    std::string catalog_name;
    catalog_cmd->add_option("name", catalog_name, "entry to print (omit to list)");

    auto* table1 = app.add_subcommand("table1", "recompute the bounds table for T = 2..8");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage; // help exits 0, usage errors exit 2
    }

    if (verify->parsed()) {
        SystemPtr sys = load_system(file);
        int is_ud = 0;
        StringOut total, distinct, witness;
        check(udc_verify(sys.get(), guard, &is_ud, &total, &distinct, &witness));
        double rate = 0;
        check(udc_sum_rate(sys.get(), &rate));
        double scale = std::pow(10.0, precision);
        char rate_str[64];
        std::snprintf(rate_str, sizeof rate_str, "%.*f", precision, std::floor(rate * scale) / scale);
        std::cout << "tuples " << total.str() << ", distinct sums " << distinct.str() << "\n";
        std::cout << "sum rate " << rate_str << " (truncated)\n";
        if (is_ud) {
            std::cout << "uniquely decodable: yes\n";
            return 0;
        }
        std::cout << "uniquely decodable: NO\nwitness: " << witness.str() << "\n";
        return kExitNegative;
    }

    if (normalize->parsed()) {
        SystemPtr sys = load_system(file);
        udc_normalization* norm = nullptr;
        check(udc_normalize(sys.get(), &norm));
        std::unique_ptr<udc_normalization, decltype(&udc_normalization_free)> guard_norm(
            norm, &udc_normalization_free);
        StringOut avg;
        check(udc_normalization_min_average_weight(norm, &avg));
        int count = udc_normalization_count(norm);
        std::cout << "minimum average weight " << avg.str() << ", " << count << " optimal choice(s)";
        if (udc_normalization_truncated(norm)) std::cout << " (list truncated)";
        std::cout << "\n";
        int T = udc_system_code_count(sys.get());
        for (int i = 0; i < count; ++i) {
            uint64_t mask = 0;
            check(udc_normalization_mask(norm, i, &mask));
            std::vector<int> order(T);
            int order_len = 0;
            check(udc_normalization_order(norm, i, order.data(), T, &order_len));
            std::cout << "  mask " << mask << ", order (";
            for (int j = 0; j < order_len; ++j) std::cout << (j ? "," : "") << order[j] + 1;
            std::cout << ")\n";
        }
        if (emit && count > 0) {
            udc_system* first = nullptr;
            check(udc_normalization_system(norm, 0, &first));
            SystemPtr owned = wrap(first);
            StringOut text;
            check(udc_system_format(owned.get(), 0, &text));
            std::cout << text.str();
        }
        return 0;
    }

    if (spectrum->parsed() || moments->parsed()) {
        SystemPtr sys = load_system(file);
        if (spectrum->parsed()) {
            StringOut text;
            check(udc_spectrum(sys.get(), code_index - 1, power_n, &text));
            std::cout << text.str();
        } else {
            StringOut mean, variance;
            double rho3 = 0;
            int has_rho3 = 0;
            check(udc_moments(sys.get(), code_index - 1, power_n, &mean, &variance, &rho3, &has_rho3));
            std::cout << "mean " << mean.str() << "\nvariance " << variance.str() << "\n";
            if (has_rho3) std::cout << "rho3 " << rho3 << "\n";
            else std::cout << "rho3 undefined (zero variance)\n";
        }
        return 0;
    }

    if (improve->parsed()) {
        SystemPtr sys = load_system(file);
        SystemPtr norm = no_normalize ? std::move(sys) : normalize_first(sys.get(), true);
        std::vector<int> g = parse_int_list(g_csv);
        udc_construction* c = nullptr;
        check(udc_improve(norm.get(), glue_n, g.data(), static_cast<int>(g.size()), &c));
        std::unique_ptr<udc_construction, decltype(&udc_construction_free)> owned(c,
                                                                                  &udc_construction_free);
        print_construction(c, precision);
        StringOut amax, bmin, gap;
        check(udc_weight_separation(norm.get(), glue_n, g.data(), static_cast<int>(g.size()), &amax,
                                    &bmin, &gap));
        std::cout << "separation: A-side max " << amax.str() << " < B-side min " << bmin.str()
                  << " (gap " << gap.str() << ")\n";
        return 0;
    }

    if (search->parsed()) {
        SystemPtr sys = load_system(file);
        const char* groups_arg = groups_spec.empty() ? nullptr : groups_spec.c_str();
        const char* pins_arg = pins_spec.empty() ? nullptr : pins_spec.c_str();

        udc_normalization* norm = nullptr;
        check(udc_normalize(sys.get(), &norm));
        std::unique_ptr<udc_normalization, decltype(&udc_normalization_free)> guard_norm(
            norm, &udc_normalization_free);
        int candidates = all_normalizations ? udc_normalization_count(norm) : 1;

        double best_rate = -1;
        int best_candidate = 0;
        std::unique_ptr<udc_search_result, decltype(&udc_search_result_free)> best(
            nullptr, &udc_search_result_free);
        for (int idx = 0; idx < candidates; ++idx) {
            udc_system* cand = nullptr;
            check(udc_normalization_system(norm, idx, &cand));
            SystemPtr owned = wrap(cand);
            udc_search_result* result = nullptr;
            check(udc_search(owned.get(), nmax, gmax, groups_arg, pins_arg, nmax >= 50 && !all_normalizations ? 1 : 0, &result));
            int n = 0, g_len = 0;
            std::vector<int> g(udc_system_code_count(sys.get()));
            double rate = 0;
            check(udc_search_best(result, &n, g.data(), static_cast<int>(g.size()), &g_len, &rate));
            if (all_normalizations) {
                uint64_t mask = 0;
                check(udc_normalization_mask(norm, idx, &mask));
                std::cout << "candidate mask " << mask << ": best n=" << n << " g=(";
                for (int i = 0; i < g_len; ++i) std::cout << (i ? "," : "") << g[i];
                std::cout << ") rate " << rate << "\n";
            }
            if (rate > best_rate) {
                best_rate = rate;
                best_candidate = idx;
                best.reset(result);
            } else {
                udc_search_result_free(result);
            }
        }

        int n = 0, g_len = 0;
        std::vector<int> g(udc_system_code_count(sys.get()));
        double rate = 0;
        check(udc_search_best(best.get(), &n, g.data(), static_cast<int>(g.size()), &g_len, &rate));
        std::cout << "best: n=" << n << " g=(";
        for (int i = 0; i < g_len; ++i) std::cout << (i ? "," : "") << g[i];
        std::cout << ")\n";
        if (all_normalizations && best_candidate != 0)
            std::cout << "from normalization candidate " << best_candidate + 1 << "\n";
        std::cout << "evaluated " << udc_search_evaluated(best.get()) << " parameter points\n";
        if (udc_search_cap_hit(best.get()))
            std::cout << "warning: an argmax sat on the fixed --gmax cap; larger caps may do better\n";
        if (udc_search_tie_overflow(best.get()))
            std::cout << "warning: near-best buffer overflowed; the tie list may be incomplete\n";
        int tie_count = udc_search_tie_count(best.get());
        if (tie_count > 0) {
            std::cout << tie_count << " tie(s):\n";
            for (int i = 0; i < tie_count; ++i) {
                int tn = 0, tlen = 0;
                check(udc_search_tie(best.get(), i, &tn, g.data(), static_cast<int>(g.size()), &tlen));
                std::cout << "  n=" << tn << " g=(";
                for (int j = 0; j < tlen; ++j) std::cout << (j ? "," : "") << g[j];
                std::cout << ")\n";
            }
        } else {
            std::cout << "no ties\n";
        }
        udc_construction* c = nullptr;
        check(udc_search_construction(best.get(), &c));
        std::unique_ptr<udc_construction, decltype(&udc_construction_free)> owned_c(
            c, &udc_construction_free);
        print_construction(c, precision);
        return 0;
    }

    if (bounds->parsed()) {
        double value = 0;
        check(udc_upper_bound(bound_T, &value));
        // upper bounds are rounded up at the printed precision
        double scale = std::pow(10.0, precision);
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.*f", precision, std::ceil(value * scale) / scale);
        std::cout << "R_upper(" << bound_T << ") = " << buffer << "\n";
        return 0;
    }

    if (analyze->parsed()) {
        SystemPtr sys = load_system(file);
        SystemPtr norm = no_normalize ? std::move(sys) : normalize_first(sys.get(), true);
        StringOut text;
        check(udc_analyze(norm.get(), n_limit, &text));
        std::cout << text.str();
        return 0;
    }

    if (discover->parsed()) {
        std::vector<int> sizes = parse_int_list(sizes_csv);
        int found = 0;
        udc_system* sys = nullptr;
        uint64_t iterations = 0, best_conflicts = 0;
        check(udc_discover(disc_d, sizes.data(), static_cast<int>(sizes.size()), budget, tenure, seed,
                           &found, &sys, &iterations, &best_conflicts));
        SystemPtr owned = wrap(sys);
        if (!found) {
            std::cout << "no conflict-free system within " << budget << " moves (best "
                      << best_conflicts << " colliding pairs)\n";
            return kExitNegative;
        }
        std::cout << "found a UD system after " << iterations << " moves\n";
        StringOut text;
        check(udc_system_format(owned.get(), 0, &text));
        if (out_file.empty()) {
            std::cout << text.str();
        } else {
            std::ofstream out(out_file);
            out << text.str();
            if (!out) {
                std::cerr << "error: cannot write '" << out_file << "'\n";
                return kExitUsage;
            }
            std::cout << "written to " << out_file << "\n";
        }
        double rate = 0;
        check(udc_sum_rate(owned.get(), &rate));
        std::cout << "sum rate " << rate << "\n";
        return 0;
    }

    if (catalog_cmd->parsed()) {
        if (catalog_name.empty()) {
            StringOut names;
            check(udc_catalog_names(&names));
            std::cout << names.str();
            return 0;
        }
        udc_system* sys = nullptr;
        check(udc_system_from_catalog(catalog_name.c_str(), &sys));
        SystemPtr owned = wrap(sys);
        StringOut text;
        check(udc_system_format(owned.get(), 0, &text));
        std::cout << text.str();
        int n = 0, g_len = 0;
        std::vector<int> g(udc_system_code_count(owned.get()));
        StringOut rate;
        udc_status st = udc_catalog_expected(catalog_name.c_str(), &n, g.data(),
                                             static_cast<int>(g.size()), &g_len, &rate);
        if (st == UDC_OK) {
            std::cout << "# published record: n=" << n << " g=(";
            for (int i = 0; i < g_len; ++i) std::cout << (i ? "," : "") << g[i];
            std::cout << ") rate " << rate.str() << "\n";
        }
        return 0;
    }

    if (table1->parsed()) {
        StringOut text;
        int mismatches = 0;
        check(udc_table1(&text, &mismatches));
        std::cout << text.str();
        return mismatches == 0 ? 0 : kExitNegative;
    }

    return kExitUsage;
}
