#include "core/weight_distribution.hpp"

#include <cmath>

#include "core/error.hpp"

namespace udc {

WeightDistribution::WeightDistribution(int span, std::vector<Int> counts)
    : span_(span), counts_(std::move(counts)) {
    if (span_ < 0) fail(errc::invalid_argument, "negative span");
    counts_.resize(span_ + 1);
    for (const Int& c : counts_)
        if (c < 0) fail(errc::invalid_argument, "negative count in weight distribution");
}

WeightDistribution WeightDistribution::of_code(const std::vector<Codeword>& code, int d) {
    if (code.empty()) fail(errc::invalid_argument, "spectrum of an empty code");
    std::vector<Int> counts(d + 1, Int(0));
    for (Codeword w : code) counts[hamming_weight(w)] += 1;
    return WeightDistribution(d, std::move(counts));
}

Int WeightDistribution::total() const {
    Int t = 0;
    for (const Int& c : counts_) t += c;
    return t;
}

WeightDistribution WeightDistribution::convolve(const WeightDistribution& other) const {
    std::vector<Int> out(span_ + other.span_ + 1, Int(0));
    for (int i = 0; i <= span_; ++i) {
        if (counts_[i] == 0) continue;
        for (int j = 0; j <= other.span_; ++j) {
            if (other.counts_[j] == 0) continue;
            out[i + j] += counts_[i] * other.counts_[j];
        }
    }
    return WeightDistribution(span_ + other.span_, std::move(out));
}

WeightDistribution WeightDistribution::power(int n) const {
    if (n < 1) fail(errc::invalid_argument, "power requires n >= 1");
    WeightDistribution acc = *this;
    for (int k = 2; k <= n; ++k) acc = acc.convolve(*this);
    return acc;
}

WeightDistribution WeightDistribution::reflect() const {
    std::vector<Int> out(counts_.rbegin(), counts_.rend());
    return WeightDistribution(span_, std::move(out));
}

Moments WeightDistribution::moments() const {
    Int total = this->total();
    if (total < 1) fail(errc::invalid_argument, "moments of an empty distribution");
    Int weight_sum = 0;
    for (int w = 0; w <= span_; ++w) weight_sum += Int(w) * counts_[w];
    Moments m;
    m.mean = Rat(weight_sum) / Rat(total);
    m.mean.canonicalize();
    Rat var(0);
    for (int w = 0; w <= span_; ++w) {
        if (counts_[w] == 0) continue;
        Rat dev = Rat(w) - m.mean;
        var += Rat(counts_[w]) * dev * dev;
    }
    var /= Rat(total);
    var.canonicalize();
    m.variance = var;
    if (var > 0) {
        // |w - mean|^3 summed exactly; only sigma^3 = var*sqrt(var) is evaluated
        // in floating point.
        Rat m3(0);
        for (int w = 0; w <= span_; ++w) {
            if (counts_[w] == 0) continue;
            Rat dev = Rat(w) - m.mean;
            if (dev < 0) dev = -dev;
            m3 += Rat(counts_[w]) * dev * dev * dev;
        }
        m3 /= Rat(total);
        Rat ratio = m3 / var; // = m3 / sigma^2
        ratio.canonicalize();
        m.rho3 = ratio.get_d() / std::sqrt(var.get_d());
    }
    return m;
}

Int WeightDistribution::band_count(const Rat& lo, const Rat& hi) const {
    if (lo > hi) fail(errc::invalid_argument, "band_count: lo > hi");
    return band_count(ceil_rat(lo), floor_rat(hi));
}

Int WeightDistribution::band_count(const Int& lo, const Int& hi) const {
    Int lo_c = lo < 0 ? Int(0) : lo;
    Int hi_c = hi > span_ ? Int(span_) : hi;
    Int sum = 0;
    for (Int w = lo_c; w <= hi_c; ++w) sum += counts_[mpz_get_ui(w.get_mpz_t())];
    return sum;
}

std::vector<Int> prefix_sums(const WeightDistribution& dist) {
    std::vector<Int> pref(dist.span() + 2, Int(0));
    for (int w = 0; w <= dist.span(); ++w) pref[w + 1] = pref[w] + dist.count(w);
    return pref;
}

} // namespace udc
