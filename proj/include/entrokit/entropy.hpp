// Shannon entropy and relative entropy over finite alphabets.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace entrokit {

/// Symbol counts over a fixed finite alphabet (bytes by default).
struct ByteHistogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    explicit ByteHistogram(std::size_t alphabet_size = 256)
        : counts(alphabet_size, 0) {}

    std::size_t alphabet_size() const { return counts.size(); }

    void add(std::size_t symbol, std::uint64_t n = 1) {
        counts.at(symbol) += n;
        total += n;
    }
};

/// Normalized symbol frequencies; probabilities sum to 1 within 1e-12.
struct ProbabilityDistribution {
    std::vector<double> probabilities;

    std::size_t alphabet_size() const { return probabilities.size(); }

    /// Throws std::invalid_argument if probabilities are out of [0,1] or
    /// do not sum to 1 within 1e-12.
    void validate() const;
};

struct EntropyReport {
    double entropy_bits_per_symbol = 0.0;
    std::uint64_t sample_size = 0;
    std::size_t alphabet_size = 0;
};

/// Exact byte frequency count; empty input yields an all-zero histogram.
ByteHistogram build_histogram(std::span<const std::uint8_t> data);

/// Normalizes counts to frequencies. Throws std::invalid_argument when
/// total = 0.
ProbabilityDistribution to_distribution(const ByteHistogram& hist);

/// H(X) = -sum p_i log2 p_i, in bits; zero-probability terms contribute 0.
EntropyReport shannon_entropy(const ProbabilityDistribution& dist,
                              std::uint64_t sample_size = 0);

/// Entropy of raw bytes, convenience for the common 256-symbol case.
EntropyReport shannon_entropy(std::span<const std::uint8_t> data);

/// Kullback-Leibler divergence D(p || q') in bits, where q' is q with
/// `smoothing` pseudo-counts added per symbol and renormalized.
///
/// Terms with p(i) = 0 contribute 0. With smoothing = 0 a support
/// violation (p(i) > 0 where q(i) = 0) throws std::domain_error.
/// Alphabet size mismatch throws std::invalid_argument.
double relative_entropy(const ProbabilityDistribution& p,
                        const ProbabilityDistribution& q,
                        double smoothing = 0.0);

}  // namespace entrokit
