#pragma once

#include <optional>
#include <vector>

#include "core/bigint.hpp"
#include "core/code_system.hpp"

namespace udc {

struct Moments {
    Rat mean;
    Rat variance;
    std::optional<double> rho3; // third absolute standardized central moment; absent when variance = 0
};

// Exact weight enumerator: counts[w] = number of words of Hamming weight w,
// stored densely over [0, span].
class WeightDistribution {
  public:
    WeightDistribution() = default;
    WeightDistribution(int span, std::vector<Int> counts);

    static WeightDistribution of_code(const std::vector<Codeword>& code, int d);

    int span() const { return span_; }
    const Int& count(int w) const { return counts_[w]; }
    const std::vector<Int>& counts() const { return counts_; }
    Int total() const;

    // Distribution of weight sums of independent picks from both operands.
    WeightDistribution convolve(const WeightDistribution& other) const;

    // n-fold power, built incrementally from the (n-1)-fold power.
    WeightDistribution power(int n) const;

    // counts'[w] = counts[span - w]; the complement code's enumerator.
    WeightDistribution reflect() const;

    Moments moments() const;

    // Sum of counts over integer weights w with lo <= w <= hi, exact rational
    // endpoint comparisons.
    Int band_count(const Rat& lo, const Rat& hi) const;
    Int band_count(const Int& lo, const Int& hi) const;

    bool operator==(const WeightDistribution&) const = default;

  private:
    int span_ = 0;
    std::vector<Int> counts_; // size span_+1
};

// Cumulative counts: prefix[w+1] = sum of counts[0..w]; prefix[0] = 0.
std::vector<Int> prefix_sums(const WeightDistribution& dist);

} // namespace udc
