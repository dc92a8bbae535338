/* udcode — uniquely decodable codes for the T-user binary adder channel.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and released by the library; every function returns a udc_status, with
 * outputs written through pointers. Strings returned through char** are
 * heap-allocated decimal/text payloads; release them with udc_string_free.
 * On any non-OK status, udc_last_error() describes the failure (thread-local).
 */
#ifndef UDCODE_H
#define UDCODE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum udc_status {
    UDC_OK = 0,
    UDC_ERROR_PARSE = 1,
    UDC_ERROR_RANGE = 2,
    UDC_ERROR_DUPLICATE = 3,
    UDC_ERROR_GUARD = 4,             /* enumeration guard exceeded */
    UDC_ERROR_EMPTY_CONSTITUENT = 5, /* a weight band is empty */
    UDC_ERROR_BALANCED_SEED = 6,     /* avg weight d/2: construction cannot improve */
    UDC_ERROR_INVALID_ARGUMENT = 7,
    UDC_ERROR_UNKNOWN_NAME = 8,
    UDC_ERROR_CERTIFICATION = 9,
    UDC_ERROR_UNSUPPORTED = 10,
    UDC_ERROR_INTERNAL = 11
} udc_status;

typedef struct udc_system udc_system;
typedef struct udc_normalization udc_normalization;
typedef struct udc_construction udc_construction;
typedef struct udc_search_result udc_search_result;

const char* udc_last_error(void);
void udc_string_free(char* s);

/* ---- code systems ---------------------------------------------------- */

/* Parses the plain-text or JSON code-file format. */
udc_status udc_system_parse(const char* text, udc_system** out);
udc_status udc_system_from_catalog(const char* name, udc_system** out);
void udc_system_free(udc_system* sys);

udc_status udc_system_format(const udc_system* sys, int as_json, char** out);
int udc_system_dimension(const udc_system* sys);
int udc_system_code_count(const udc_system* sys);
long long udc_system_code_size(const udc_system* sys, int index);
udc_status udc_system_name(const udc_system* sys, char** out);

/* Newline-separated catalog names. */
udc_status udc_catalog_names(char** out);
/* Published (n, g, rate) for a catalog entry; status UDC_ERROR_UNKNOWN_NAME if
 * the entry has none. g_out receives up to g_cap entries, *g_len the count. */
udc_status udc_catalog_expected(const char* name, int* n, int* g_out, int g_cap, int* g_len,
                                char** rate);

/* (1/d) log2 prod |C_i| of the seed system. */
udc_status udc_sum_rate(const udc_system* sys, double* out);

/* ---- verification ---------------------------------------------------- */

/* Exhaustive unique-decodability check; guard 0 means the default 1e8.
 * witness receives a formatted collision (two tuples + common sum) or NULL
 * when the system is UD. */
udc_status udc_verify(const udc_system* sys, uint64_t guard, int* is_ud, char** total_tuples,
                      char** distinct_sums, char** witness);
/* Colliding tuple pairs: sum over sum multiplicities m of C(m,2). */
udc_status udc_conflict_count(const udc_system* sys, uint64_t guard, uint64_t* out);

/* ---- equivalence / normalization ------------------------------------- */

udc_status udc_negate(const udc_system* sys, uint64_t mask, udc_system** out);
/* perm[i] = new position of coordinate i (0-based, length d). */
udc_status udc_permute(const udc_system* sys, const int* perm, int len, udc_system** out);

/* Normalization: all masks minimizing min_i avg-weight(C_i ^ mask). */
udc_status udc_normalize(const udc_system* sys, udc_normalization** out);
void udc_normalization_free(udc_normalization* norm);
int udc_normalization_count(const udc_normalization* norm);
int udc_normalization_truncated(const udc_normalization* norm);
udc_status udc_normalization_min_average_weight(const udc_normalization* norm, char** out);
udc_status udc_normalization_mask(const udc_normalization* norm, int index, uint64_t* out);
/* Original constituent indices in normalized order (fronted code first). */
udc_status udc_normalization_order(const udc_normalization* norm, int index, int* out, int cap,
                                   int* len);
udc_status udc_normalization_system(const udc_normalization* norm, int index, udc_system** out);

/* ---- spectra ---------------------------------------------------------- */

/* Weight distribution of constituent `index` of the n-fold power, as
 * "weight count" lines with exact decimal counts. */
udc_status udc_spectrum(const udc_system* sys, int index, int n, char** out);
/* Exact mean and variance ("num/den"), rho3 when the variance is positive. */
udc_status udc_moments(const udc_system* sys, int index, int n, char** mean, char** variance,
                       double* rho3, int* has_rho3);

/* ---- the gluing construction ------------------------------------------ */

/* Banded construction sizes on a normalized system; g has one entry per
 * constituent beyond the first. */
udc_status udc_improve(const udc_system* normalized, int n, const int* g, int g_len,
                       udc_construction** out);
void udc_construction_free(udc_construction* c);
long udc_construction_dim(const udc_construction* c);
double udc_construction_rate(const udc_construction* c);
/* Rate truncated (rounded down) to `decimals` places. */
udc_status udc_construction_rate_string(const udc_construction* c, int decimals, char** out);
int udc_construction_size_count(const udc_construction* c);
udc_status udc_construction_size(const udc_construction* c, int index, char** out);
udc_status udc_construction_ab(const udc_construction* c, char** a_size, char** b_size);

/* Weight-separation certificate: the largest A*-side and smallest B*-side
 * sum weights; the gap is always >= 1. */
udc_status udc_weight_separation(const udc_system* normalized, int n, const int* g, int g_len,
                                 char** a_side_max, char** b_side_min, char** gap);

/* Explicit glued system in dimension d*n (requires d*n <= 64 and sizes
 * within the guard). */
udc_status udc_materialize(const udc_system* normalized, int n, const int* g, int g_len,
                           uint64_t guard, udc_system** out);

/* ---- exhaustive search ------------------------------------------------ */

/* Maximizes the glued rate over n <= n_max and admissible g vectors.
 * g_cap < 0 selects the default auto-expanding caps. groups/pins are
 * comma/semicolon lists of 1-based indices, e.g. groups "2,3;4,5" pins "6,7";
 * NULL selects the symmetry defaults. A nonzero `progress` prints sweep
 * progress to stderr. */
udc_status udc_search(const udc_system* normalized, int n_max, int g_cap, const char* groups,
                      const char* pins, int progress, udc_search_result** out);
void udc_search_result_free(udc_search_result* r);
udc_status udc_search_best(const udc_search_result* r, int* n, int* g_out, int g_cap, int* g_len,
                           double* rate);
uint64_t udc_search_evaluated(const udc_search_result* r);
/* Nonzero when some per-n argmax sat on a fixed --gmax cap (the optimum may
 * lie beyond it) or when the near-best buffer overflowed (tie list may be
 * incomplete). */
int udc_search_cap_hit(const udc_search_result* r);
int udc_search_tie_overflow(const udc_search_result* r);
int udc_search_tie_count(const udc_search_result* r);
udc_status udc_search_tie(const udc_search_result* r, int index, int* n, int* g_out, int g_cap,
                          int* g_len);
udc_status udc_search_construction(const udc_search_result* r, udc_construction** out);

/* ---- analytic bounds --------------------------------------------------- */

udc_status udc_upper_bound(int T, double* out);
udc_status udc_gaussian_tail(double x, double* out);
/* Concentration lower bounds on banded fractions of the n-fold power of constituent `index`. */
udc_status udc_band_bound(const udc_system* sys, int index, int n, double t, int one_sided,
                      double* out);
/* Moments, guarantee constants and the first improving n, as a text report. */
udc_status udc_analyze(const udc_system* normalized, int n_limit, char** out);
udc_status udc_guarantee_kappa(const udc_system* normalized, char** out);
udc_status udc_guarantee_theta(const udc_system* normalized, int n, double* out);
udc_status udc_guarantee_rate(const udc_system* normalized, int n, double* out);
/* Smallest n <= limit whose guaranteed rate beats the seed rate; *out = -1
 * when none exists below the limit. */
udc_status udc_first_improving_n(const udc_system* normalized, int limit, int* out);

/* ---- discovery --------------------------------------------------------- */

/* Tabu search for a UD system of the given shape. *found tells whether a
 * conflict-free system was reached within the budget; when it was, *out
 * holds it (otherwise *out is NULL and best_conflicts reports the best
 * objective seen). */
udc_status udc_discover(int d, const int* sizes, int count, uint64_t budget, int tenure,
                        uint64_t seed, int* found, udc_system** out, uint64_t* iterations,
                        uint64_t* best_conflicts);

/* ---- summary table ------------------------------------------------------ */

/* Recomputes the bounds table for T = 2..8; *mismatches counts rows that
 * disagree with the published values. */
udc_status udc_table1(char** out, int* mismatches);

#ifdef __cplusplus
}
#endif

#endif /* UDCODE_H */
