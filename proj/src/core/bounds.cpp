#include "core/bounds.hpp"

#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace udc {

namespace {

// Berry-Esseen constants from Korolev and Shevtsova, used as given.
constexpr double kOneSidedConstant = 0.345;
constexpr double kTwoSidedConstant = 0.69;

void check_band_bound_args(const Moments& m, int n, double t) {
    if (n < 1) fail(errc::invalid_argument, "band bound requires n >= 1");
    if (!(t > 0)) fail(errc::invalid_argument, "band bound requires t > 0");
    if (m.variance == 0) fail(errc::invalid_argument, "band bound requires positive variance");
}

} // namespace

double upper_bound(int T) {
    if (T < 1) fail(errc::invalid_argument, "upper_bound requires T >= 1");
    long double acc = 0;
    for (int k = 0; k <= T; ++k) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), T, k);
        long double p = std::pow(2.0L, -T) * static_cast<long double>(mpz_get_d(binom.get_mpz_t()));
        acc += p * (static_cast<long double>(T) - log2_int(binom));
    }
    return static_cast<double>(acc);
}

double gaussian_tail_bound(double x) {
    if (x > 0) fail(errc::invalid_argument, "tail bound is stated for x <= 0");
    return 0.5 * std::exp(-x * x / 2);
}

double band_bound_two_sided(const WeightDistribution& base, int n, double t) {
    Moments m = base.moments();
    check_band_bound_args(m, n, t);
    double var = m.variance.get_d();
    return 1.0 - std::exp(-t * t / (2.0 * n * var)) - kTwoSidedConstant * (1.0 + *m.rho3) / std::sqrt(n);
}

double band_bound_one_sided(const WeightDistribution& base, int n, double t) {
    Moments m = base.moments();
    check_band_bound_args(m, n, t);
    double var = m.variance.get_d();
    return 1.0 - 0.5 * std::exp(-t * t / (2.0 * n * var)) - kOneSidedConstant * (1.0 + *m.rho3) / std::sqrt(n);
}

double GuaranteeParams::theta(int n) const {
    double worst = 0;
    bool any = false;
    double rsqrt = 1.0 / std::sqrt(static_cast<double>(n));
    if (alpha_defined) {
        worst = std::exp(-n * alpha * alpha / 2) + 2 * beta * rsqrt;
        any = true;
    }
    if (sigma1 > 0) {
        double halfgap = kappa.get_d() * 2; // d/2 - avg(C_1)
        double expr = 0.5 * std::exp(-n * halfgap * halfgap / (8 * sigma1 * sigma1)) + beta * rsqrt;
        if (!any || expr > worst) worst = expr;
        any = true;
    }
    return any ? worst : 0.0;
}

double GuaranteeParams::guaranteed_rate(int n) const {
    double th = theta(n);
    if (th >= 1) return -std::numeric_limits<double>::infinity();
    return seed_rate + std::log2(2 * std::pow(1 - th, T)) / (static_cast<double>(d) * n);
}

GuaranteeParams guarantee_params(const CodeSystem& norm) {
    validate(norm);
    Rat avg1 = average_weight(norm.codes[0]);
    Rat half(norm.d, 2);
    half.canonicalize();
    if (avg1 == half)
        fail(errc::balanced_seed, "first constituent has average weight d/2; the improvement guarantee does not apply");
    if (avg1 > half)
        fail(errc::invalid_argument, "system is not normalized: avg-weight(C_1) exceeds d/2");

    GuaranteeParams p;
    p.T = norm.users();
    p.d = norm.d;
    p.kappa = (half - avg1) / 2;
    p.kappa.canonicalize();
    p.seed_rate = static_cast<double>(sum_rate_seed(norm));

    double sigma_sum_tail = 0; // sum of sigma_i over i >= 2
    double max_rho_term = 0;
    for (int i = 0; i < norm.users(); ++i) {
        Moments m = WeightDistribution::of_code(norm.codes[i], norm.d).moments();
        double sigma = std::sqrt(m.variance.get_d());
        if (i == 0) p.sigma1 = sigma;
        else sigma_sum_tail += sigma;
        if (m.variance > 0) {
            p.positive_variance.push_back(i + 1);
            max_rho_term = std::max(max_rho_term, 1.0 + *m.rho3);
        }
    }
    if (!p.positive_variance.empty()) {
        p.beta_defined = true;
        p.beta = kOneSidedConstant * max_rho_term;
    }
    bool tail_positive = false;
    for (int i : p.positive_variance)
        if (i >= 2) tail_positive = true;
    if (tail_positive) {
        p.alpha_defined = true;
        p.alpha = Rat(half - avg1).get_d() / (2 * sigma_sum_tail);
    }
    return p;
}

std::optional<int> first_improving_n(const GuaranteeParams& params, int limit) {
    if (limit < 1) fail(errc::invalid_argument, "limit must be >= 1");
    double threshold = 1.0 - std::pow(2.0, -1.0 / params.T);
    for (int n = 1; n <= limit; ++n)
        if (params.theta(n) < threshold) return n;
    return std::nullopt;
}

} // namespace udc
