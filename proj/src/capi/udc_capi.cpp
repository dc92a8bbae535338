#include "udcode.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>

#include "core/bounds.hpp"
#include "core/catalog.hpp"
#include "core/codefile.hpp"
#include "core/error.hpp"
#include "core/glue.hpp"
#include "core/normalize.hpp"
#include "core/search.hpp"
#include "core/table1.hpp"
#include "core/tabu.hpp"
#include "core/verify.hpp"

struct udc_system {
    udc::CodeSystem sys;
};
struct udc_normalization {
    udc::NormalizationResult result;
};
struct udc_construction {
    udc::ConstructionResult result;
};
struct udc_search_result {
    udc::SearchOutcome outcome;
    udc::ConstructionResult best; // kept for udc_search_construction
};

namespace {

thread_local std::string g_last_error;

udc_status status_of(udc::errc code) {
    using udc::errc;
    switch (code) {
        case errc::parse: return UDC_ERROR_PARSE;
        case errc::range: return UDC_ERROR_RANGE;
        case errc::duplicate: return UDC_ERROR_DUPLICATE;
        case errc::guard_exceeded: return UDC_ERROR_GUARD;
        case errc::empty_constituent: return UDC_ERROR_EMPTY_CONSTITUENT;
        case errc::balanced_seed: return UDC_ERROR_BALANCED_SEED;
        case errc::invalid_argument: return UDC_ERROR_INVALID_ARGUMENT;
        case errc::unknown_name: return UDC_ERROR_UNKNOWN_NAME;
        case errc::certification_failure: return UDC_ERROR_CERTIFICATION;
        case errc::unsupported: return UDC_ERROR_UNSUPPORTED;
    }
    return UDC_ERROR_INTERNAL;
}

template <typename Fn>
udc_status guarded(Fn&& fn) {
    try {
        fn();
        return UDC_OK;
    } catch (const udc::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return UDC_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return UDC_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) udc::fail(udc::errc::invalid_argument, what);
}

std::vector<int> copy_g(const int* g, int g_len) {
    require(g != nullptr || g_len == 0, "null g vector");
    return std::vector<int>(g, g + g_len);
}

void write_g(const std::vector<int>& g, int* g_out, int g_cap, int* g_len) {
    require(g_len != nullptr, "null g_len");
    *g_len = static_cast<int>(g.size());
    require(g_out != nullptr && g_cap >= static_cast<int>(g.size()), "g buffer too small");
    for (size_t i = 0; i < g.size(); ++i) g_out[i] = g[i];
}

std::vector<std::vector<int>> parse_index_groups(const char* text) {
    std::vector<std::vector<int>> groups;
    if (text == nullptr || *text == '\0') return groups;
    std::string s(text);
    std::replace(s.begin(), s.end(), ';', '\n');
    std::istringstream lines(s);
    std::string line;
    while (std::getline(lines, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::vector<int> grp;
        int v;
        while (ls >> v) grp.push_back(v);
        if (!ls.eof()) udc::fail(udc::errc::invalid_argument, "bad index list: " + line);
        if (!grp.empty()) groups.push_back(std::move(grp));
    }
    return groups;
}

udc::WeightDistribution power_spectrum(const udc::CodeSystem& sys, int index, int n) {
    require(index >= 0 && index < sys.users(), "constituent index out of range");
    require(n >= 1, "power must be >= 1");
    return udc::WeightDistribution::of_code(sys.codes[index], sys.d).power(n);
}

} // namespace

extern "C" {

const char* udc_last_error(void) { return g_last_error.c_str(); }

void udc_string_free(char* s) { delete[] s; }

udc_status udc_system_parse(const char* text, udc_system** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new udc_system{udc::parse_code_file(text)};
    });
}

udc_status udc_system_from_catalog(const char* name, udc_system** out) {
    return guarded([&] {
        require(name && out, "null argument");
        *out = new udc_system{udc::catalog_get(name).system};
    });
}

void udc_system_free(udc_system* sys) { delete sys; }

udc_status udc_system_format(const udc_system* sys, int as_json, char** out) {
    return guarded([&] {
        require(sys && out, "null argument");
        *out = copy_string(as_json ? udc::serialize_code_system_json(sys->sys)
                                   : udc::serialize_code_system(sys->sys));
    });
}

int udc_system_dimension(const udc_system* sys) { return sys ? sys->sys.d : 0; }

int udc_system_code_count(const udc_system* sys) { return sys ? sys->sys.users() : 0; }

long long udc_system_code_size(const udc_system* sys, int index) {
    if (!sys || index < 0 || index >= sys->sys.users()) return -1;
    return static_cast<long long>(sys->sys.codes[index].size());
}

udc_status udc_system_name(const udc_system* sys, char** out) {
    return guarded([&] {
        require(sys && out, "null argument");
        *out = copy_string(sys->sys.name);
    });
}

udc_status udc_catalog_names(char** out) {
    return guarded([&] {
        require(out, "null argument");
        std::string text;
        for (const std::string& n : udc::catalog_names()) {
            text += n;
            text += '\n';
        }
        *out = copy_string(text);
    });
}

udc_status udc_catalog_expected(const char* name, int* n, int* g_out, int g_cap, int* g_len,
                                char** rate) {
    return guarded([&] {
        require(name && n && rate, "null argument");
        const udc::CatalogEntry& entry = udc::catalog_get(name);
        if (!entry.expected)
            udc::fail(udc::errc::unknown_name, std::string(name) + " has no published parameters");
        *n = entry.expected->n;
        write_g(entry.expected->g, g_out, g_cap, g_len);
        *rate = copy_string(entry.expected->rate);
    });
}

udc_status udc_sum_rate(const udc_system* sys, double* out) {
    return guarded([&] {
        require(sys && out, "null argument");
        *out = static_cast<double>(udc::sum_rate_seed(sys->sys));
    });
}

udc_status udc_verify(const udc_system* sys, uint64_t guard, int* is_ud, char** total_tuples,
                      char** distinct_sums, char** witness) {
    return guarded([&] {
        require(sys && is_ud, "null argument");
        udc::UDReport rep = udc::verify_ud(sys->sys, guard ? guard : udc::kDefaultTupleGuard);
        *is_ud = rep.is_ud ? 1 : 0;
        if (total_tuples) *total_tuples = copy_string(rep.total_tuples.get_str());
        if (distinct_sums) *distinct_sums = copy_string(rep.distinct_sums.get_str());
        if (witness) {
            if (rep.witness) {
                std::ostringstream w;
                auto tuple = [&](const std::vector<udc::Codeword>& t) {
                    w << '(';
                    for (size_t i = 0; i < t.size(); ++i) w << (i ? ", " : "") << t[i];
                    w << ')';
                };
                tuple(rep.witness->first);
                w << " and ";
                tuple(rep.witness->second);
                w << " sum to [";
                for (size_t i = 0; i < rep.witness_sum.size(); ++i)
                    w << (i ? ", " : "") << rep.witness_sum[i];
                w << "]";
                *witness = copy_string(w.str());
            } else {
                *witness = nullptr;
            }
        }
    });
}

udc_status udc_conflict_count(const udc_system* sys, uint64_t guard, uint64_t* out) {
    return guarded([&] {
        require(sys && out, "null argument");
        *out = udc::conflict_count(sys->sys, guard ? guard : udc::kDefaultTupleGuard);
    });
}

udc_status udc_negate(const udc_system* sys, uint64_t mask, udc_system** out) {
    return guarded([&] {
        require(sys && out, "null argument");
        *out = new udc_system{udc::negate_coords(sys->sys, mask)};
    });
}

udc_status udc_permute(const udc_system* sys, const int* perm, int len, udc_system** out) {
    return guarded([&] {
        require(sys && perm && out, "null argument");
        *out = new udc_system{udc::permute_coords(sys->sys, std::vector<int>(perm, perm + len))};
    });
}

udc_status udc_normalize(const udc_system* sys, udc_normalization** out) {
    return guarded([&] {
        require(sys && out, "null argument");
        *out = new udc_normalization{udc::normalize_step1(sys->sys)};
    });
}

void udc_normalization_free(udc_normalization* norm) { delete norm; }

int udc_normalization_count(const udc_normalization* norm) {
    return norm ? static_cast<int>(norm->result.candidates.size()) : 0;
}

int udc_normalization_truncated(const udc_normalization* norm) {
    return norm && norm->result.truncated ? 1 : 0;
}

udc_status udc_normalization_min_average_weight(const udc_normalization* norm, char** out) {
    return guarded([&] {
        require(norm && out, "null argument");
        *out = copy_string(udc::format_rational(norm->result.min_average_weight));
    });
}

udc_status udc_normalization_mask(const udc_normalization* norm, int index, uint64_t* out) {
    return guarded([&] {
        require(norm && out, "null argument");
        require(index >= 0 && index < udc_normalization_count(norm), "candidate index out of range");
        *out = norm->result.candidates[index].mask;
    });
}

udc_status udc_normalization_order(const udc_normalization* norm, int index, int* out, int cap,
                                   int* len) {
    return guarded([&] {
        require(norm, "null argument");
        require(index >= 0 && index < udc_normalization_count(norm), "candidate index out of range");
        write_g(norm->result.candidates[index].code_order, out, cap, len);
    });
}

udc_status udc_normalization_system(const udc_normalization* norm, int index, udc_system** out) {
    return guarded([&] {
        require(norm && out, "null argument");
        require(index >= 0 && index < udc_normalization_count(norm), "candidate index out of range");
        *out = new udc_system{norm->result.candidates[index].system};
    });
}

udc_status udc_spectrum(const udc_system* sys, int index, int n, char** out) {
    return guarded([&] {
        require(sys && out, "null argument");
        udc::WeightDistribution dist = power_spectrum(sys->sys, index, n);
        std::ostringstream text;
        for (int w = 0; w <= dist.span(); ++w)
            if (dist.count(w) != 0) text << w << ' ' << dist.count(w).get_str() << '\n';
        *out = copy_string(text.str());
    });
}

udc_status udc_moments(const udc_system* sys, int index, int n, char** mean, char** variance,
                       double* rho3, int* has_rho3) {
    return guarded([&] {
        require(sys, "null argument");
        udc::Moments m = power_spectrum(sys->sys, index, n).moments();
        if (mean) *mean = copy_string(udc::format_rational(m.mean));
        if (variance) *variance = copy_string(udc::format_rational(m.variance));
        if (has_rho3) *has_rho3 = m.rho3.has_value() ? 1 : 0;
        if (rho3) *rho3 = m.rho3.value_or(0.0);
    });
}

udc_status udc_improve(const udc_system* normalized, int n, const int* g, int g_len,
                       udc_construction** out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        udc::GlueParams params{n, copy_g(g, g_len)};
        *out = new udc_construction{udc::improved_sizes(normalized->sys, params)};
    });
}

void udc_construction_free(udc_construction* c) { delete c; }

long udc_construction_dim(const udc_construction* c) { return c ? c->result.dim : 0; }

double udc_construction_rate(const udc_construction* c) { return c ? c->result.rate : 0; }

udc_status udc_construction_rate_string(const udc_construction* c, int decimals, char** out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = copy_string(
            udc::format_truncated(udc::construction_rate(c->result.sizes, c->result.dim), decimals));
    });
}

int udc_construction_size_count(const udc_construction* c) {
    return c ? static_cast<int>(c->result.sizes.size()) : 0;
}

udc_status udc_construction_size(const udc_construction* c, int index, char** out) {
    return guarded([&] {
        require(c && out, "null argument");
        require(index >= 0 && index < udc_construction_size_count(c), "size index out of range");
        *out = copy_string(c->result.sizes[index].get_str());
    });
}

udc_status udc_construction_ab(const udc_construction* c, char** a_size, char** b_size) {
    return guarded([&] {
        require(c, "null argument");
        if (a_size) *a_size = copy_string(c->result.a_size.get_str());
        if (b_size) *b_size = copy_string(c->result.b_size.get_str());
    });
}

udc_status udc_weight_separation(const udc_system* normalized, int n, const int* g, int g_len,
                                 char** a_side_max, char** b_side_min, char** gap) {
    return guarded([&] {
        require(normalized, "null argument");
        udc::GlueParams params{n, copy_g(g, g_len)};
        udc::ConstructionResult res = udc::improved_sizes(normalized->sys, params);
        udc::SeparationCertificate cert = udc::weight_separation(normalized->sys, params, res);
        if (a_side_max) *a_side_max = copy_string(cert.a_side_max.get_str());
        if (b_side_min) *b_side_min = copy_string(cert.b_side_min.get_str());
        if (gap) *gap = copy_string(cert.gap.get_str());
    });
}

udc_status udc_materialize(const udc_system* normalized, int n, const int* g, int g_len,
                           uint64_t guard, udc_system** out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        udc::GlueParams params{n, copy_g(g, g_len)};
        *out = new udc_system{
            udc::materialize_small(normalized->sys, params, guard ? guard : udc::kDefaultTupleGuard)};
    });
}

udc_status udc_search(const udc_system* normalized, int n_max, int g_cap, const char* groups,
                      const char* pins, int progress, udc_search_result** out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        udc::SearchConfig config;
        if (progress) {
            int step = n_max >= 20 ? n_max / 20 : 1;
            config.progress = [step](int n, int total) {
                if (n % step == 0 || n == total)
                    std::fprintf(stderr, "search: n = %d/%d\n", n, total);
            };
        }
        if (groups == nullptr && pins == nullptr) {
            config = udc::symmetry_groups(normalized->sys);
        } else {
            config.groups = parse_index_groups(groups);
            for (const auto& grp : parse_index_groups(pins))
                for (int idx : grp) config.zero_fixed.push_back(idx);
            // indices not mentioned become singleton groups
            std::vector<bool> seen(normalized->sys.users() + 1, false);
            for (const auto& grp : config.groups)
                for (int idx : grp)
                    if (idx >= 2 && idx <= normalized->sys.users()) seen[idx] = true;
            for (int idx : config.zero_fixed)
                if (idx >= 2 && idx <= normalized->sys.users()) seen[idx] = true;
            for (int idx = 2; idx <= normalized->sys.users(); ++idx)
                if (!seen[idx]) config.groups.push_back({idx});
        }
        config.n_max = n_max;
        if (g_cap >= 0) config.g_cap = g_cap;
        udc::SearchOutcome outcome = udc::search(normalized->sys, config);
        auto* r = new udc_search_result;
        r->best = outcome.best;
        r->outcome = std::move(outcome);
        *out = r;
    });
}

void udc_search_result_free(udc_search_result* r) { delete r; }

udc_status udc_search_best(const udc_search_result* r, int* n, int* g_out, int g_cap, int* g_len,
                           double* rate) {
    return guarded([&] {
        require(r, "null argument");
        if (n) *n = r->outcome.best.params.n;
        write_g(r->outcome.best.params.g, g_out, g_cap, g_len);
        if (rate) *rate = r->outcome.best.rate;
    });
}

uint64_t udc_search_evaluated(const udc_search_result* r) { return r ? r->outcome.evaluated : 0; }

int udc_search_cap_hit(const udc_search_result* r) { return r && r->outcome.cap_hit ? 1 : 0; }

int udc_search_tie_overflow(const udc_search_result* r) {
    return r && r->outcome.tie_overflow ? 1 : 0;
}

int udc_search_tie_count(const udc_search_result* r) {
    return r ? static_cast<int>(r->outcome.ties.size()) : 0;
}

udc_status udc_search_tie(const udc_search_result* r, int index, int* n, int* g_out, int g_cap,
                          int* g_len) {
    return guarded([&] {
        require(r, "null argument");
        require(index >= 0 && index < udc_search_tie_count(r), "tie index out of range");
        if (n) *n = r->outcome.ties[index].n;
        write_g(r->outcome.ties[index].g, g_out, g_cap, g_len);
    });
}

udc_status udc_search_construction(const udc_search_result* r, udc_construction** out) {
    return guarded([&] {
        require(r && out, "null argument");
        *out = new udc_construction{r->best};
    });
}

udc_status udc_upper_bound(int T, double* out) {
    return guarded([&] {
        require(out, "null argument");
        *out = udc::upper_bound(T);
    });
}

udc_status udc_gaussian_tail(double x, double* out) {
    return guarded([&] {
        require(out, "null argument");
        *out = udc::gaussian_tail_bound(x);
    });
}

udc_status udc_band_bound(const udc_system* sys, int index, int n, double t, int one_sided,
                      double* out) {
    return guarded([&] {
        require(sys && out, "null argument");
        require(index >= 0 && index < sys->sys.users(), "constituent index out of range");
        udc::WeightDistribution base = udc::WeightDistribution::of_code(sys->sys.codes[index], sys->sys.d);
        *out = one_sided ? udc::band_bound_one_sided(base, n, t) : udc::band_bound_two_sided(base, n, t);
    });
}

udc_status udc_analyze(const udc_system* normalized, int n_limit, char** out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        const udc::CodeSystem& sys = normalized->sys;
        std::ostringstream text;
        for (int i = 0; i < sys.users(); ++i) {
            udc::Moments m = udc::WeightDistribution::of_code(sys.codes[i], sys.d).moments();
            text << "C" << (i + 1) << ": |C|=" << sys.codes[i].size()
                 << " mean=" << udc::format_rational(m.mean)
                 << " variance=" << udc::format_rational(m.variance);
            if (m.rho3) text << " rho3=" << *m.rho3;
            text << '\n';
        }
        udc::GuaranteeParams p = udc::guarantee_params(sys);
        text << "seed rate R = " << p.seed_rate << '\n';
        text << "kappa = " << udc::format_rational(p.kappa) << '\n';
        if (p.alpha_defined) text << "alpha = " << p.alpha << '\n';
        else text << "alpha undefined (no positive-variance constituent beyond the first)\n";
        if (p.beta_defined) text << "beta = " << p.beta << '\n';
        else text << "beta undefined (all constituents have constant weight)\n";
        auto n0 = udc::first_improving_n(p, n_limit);
        if (n0) {
            text << "first n with guaranteed rate above R: " << *n0 << " (theta=" << p.theta(*n0)
                 << ", guaranteed rate " << p.guaranteed_rate(*n0) << ")\n";
        } else {
            text << "no improving n up to " << n_limit << '\n';
        }
        *out = copy_string(text.str());
    });
}

udc_status udc_guarantee_kappa(const udc_system* normalized, char** out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        *out = copy_string(udc::format_rational(udc::guarantee_params(normalized->sys).kappa));
    });
}

udc_status udc_guarantee_theta(const udc_system* normalized, int n, double* out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        require(n >= 1, "n must be >= 1");
        *out = udc::guarantee_params(normalized->sys).theta(n);
    });
}

udc_status udc_guarantee_rate(const udc_system* normalized, int n, double* out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        require(n >= 1, "n must be >= 1");
        *out = udc::guarantee_params(normalized->sys).guaranteed_rate(n);
    });
}

udc_status udc_first_improving_n(const udc_system* normalized, int limit, int* out) {
    return guarded([&] {
        require(normalized && out, "null argument");
        auto n0 = udc::first_improving_n(udc::guarantee_params(normalized->sys), limit);
        *out = n0 ? *n0 : -1;
    });
}

udc_status udc_discover(int d, const int* sizes, int count, uint64_t budget, int tenure,
                        uint64_t seed, int* found, udc_system** out, uint64_t* iterations,
                        uint64_t* best_conflicts) {
    return guarded([&] {
        require(sizes && found, "null argument");
        udc::DiscoverySpec spec;
        spec.d = d;
        spec.sizes.assign(sizes, sizes + count);
        spec.budget = budget;
        if (tenure >= 0) spec.tenure = tenure;
        spec.seed = seed;
        udc::DiscoveryResult res = udc::tabu_search(spec);
        *found = res.system.has_value() ? 1 : 0;
        if (out) *out = res.system ? new udc_system{*res.system} : nullptr;
        if (iterations) *iterations = res.iterations;
        if (best_conflicts) *best_conflicts = res.best_conflicts;
    });
}

udc_status udc_table1(char** out, int* mismatches) {
    return guarded([&] {
        udc::Table1Report report = udc::run_table1();
        if (out) *out = copy_string(report.format());
        if (mismatches) *mismatches = report.mismatches;
    });
}

} // extern "C"
