#pragma once

#include <optional>
#include <vector>

#include "core/bigint.hpp"
#include "core/code_system.hpp"
#include "core/weight_distribution.hpp"

namespace udc {

// Entropy upper bound on the T-user sum rate:
// sum_k (C(T,k)/2^T) log2(2^T / C(T,k)).
double upper_bound(int T);

// Normal tail estimate Phi(x) <= (1/2) e^{-x^2/2} for x <= 0.
double gaussian_tail_bound(double x);

// Guaranteed fractions |C*|/|C^n| for the centered band of half-width t
// around the power mean (two-sided) and for either one-sided cut. The base
// distribution must have positive variance; results may be negative
// (vacuous) and are returned raw.
double band_bound_two_sided(const WeightDistribution& base, int n, double t);
double band_bound_one_sided(const WeightDistribution& base, int n, double t);

// Constants and functions of the analytic improvement guarantee, evaluated on a
// normalized system (first constituent of minimal average weight).
struct GuaranteeParams {
    int T = 0;
    int d = 0;
    Rat kappa;                           // (d/2 - avg(C_1)) / 2
    bool alpha_defined = false;          // requires some i >= 2 with positive variance
    double alpha = 0;
    bool beta_defined = false;           // requires I nonempty
    double beta = 0;
    double sigma1 = 0;                   // std deviation of C_1 weights
    double seed_rate = 0;                // R
    std::vector<int> positive_variance;  // I, 1-based

    double theta(int n) const;           // max of the two guarantee expressions
    double guaranteed_rate(int n) const; // R + log2(2 (1-theta)^T) / (d n)
};

GuaranteeParams guarantee_params(const CodeSystem& norm);

// Smallest n <= limit with guaranteed_rate(n) > seed rate, if any.
std::optional<int> first_improving_n(const GuaranteeParams& params, int limit);

} // namespace udc
