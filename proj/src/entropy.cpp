#include "entrokit/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace entrokit {

void ProbabilityDistribution::validate() const {
    double sum = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("probability out of [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("probabilities do not sum to 1");
}

ByteHistogram build_histogram(std::span<const std::uint8_t> data) {
    ByteHistogram hist(256);
    for (std::uint8_t b : data) ++hist.counts[b];
    hist.total = data.size();
    return hist;
}

ProbabilityDistribution to_distribution(const ByteHistogram& hist) {
    if (hist.total == 0)
        throw std::invalid_argument("cannot normalize an empty histogram");
    ProbabilityDistribution dist;
    dist.probabilities.resize(hist.counts.size());
    const double total = static_cast<double>(hist.total);
    for (std::size_t i = 0; i < hist.counts.size(); ++i)
        dist.probabilities[i] = static_cast<double>(hist.counts[i]) / total;
    return dist;
}

EntropyReport shannon_entropy(const ProbabilityDistribution& dist,
                              std::uint64_t sample_size) {
    double h = 0.0;
    for (double p : dist.probabilities)
        if (p > 0.0) h -= p * std::log2(p);
    // Clamp the tiny negative values rounding can produce for degenerate
    // distributions.
    if (h < 0.0) h = 0.0;
    return {h, sample_size, dist.alphabet_size()};
}

EntropyReport shannon_entropy(std::span<const std::uint8_t> data) {
    if (data.empty()) return {0.0, 0, 256};
    ByteHistogram hist = build_histogram(data);
    return shannon_entropy(to_distribution(hist), hist.total);
}

double relative_entropy(const ProbabilityDistribution& p,
                        const ProbabilityDistribution& q,
                        double smoothing) {
    if (p.alphabet_size() != q.alphabet_size())
        throw std::invalid_argument("alphabet size mismatch");
    if (smoothing < 0.0)
        throw std::invalid_argument("smoothing must be >= 0");

    const std::size_t n = p.alphabet_size();
    const double q_norm = 1.0 + smoothing * static_cast<double>(n);

    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pi = p.probabilities[i];
        if (pi <= 0.0) continue;
        const double qi = (q.probabilities[i] + smoothing) / q_norm;
        if (qi <= 0.0)
            throw std::domain_error(
                "support violation: p(i) > 0 where q(i) = 0 and smoothing = 0");
        d += pi * std::log2(pi / qi);
    }
    return d;
}

}  // namespace entrokit
