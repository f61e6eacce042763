#include "entrokit/aslr.hpp"

#include "entrokit/randomness.hpp"

#include <cmath>
#include <stdexcept>

namespace entrokit::aslr {

std::string to_string(GuessModel model) {
    return model == GuessModel::without_replacement ? "without_replacement"
                                                    : "with_replacement";
}

GuessModel guess_model_from_string(const std::string& name) {
    if (name == "without_replacement") return GuessModel::without_replacement;
    if (name == "with_replacement") return GuessModel::with_replacement;
    throw std::invalid_argument("unknown guess model: " + name);
}

std::vector<AslrProfile> builtin_profiles() {
    return {
        {"Windows 10", 19, 24, 19},
        {"Linux (x86-64)", 22, 13, 28},
        {"macOS", 16, 14, 16},
        {"Android 11+", 24, 16, 24},
    };
}

AttemptEstimate expected_attempts(int bits, GuessModel model) {
    if (bits < 0 || bits > 64)
        throw std::out_of_range("entropy bits must be in [0, 64]");
    const double space = std::ldexp(1.0, bits);  // 2^bits
    AttemptEstimate estimate;
    estimate.bits = bits;
    estimate.model = model;
    estimate.expected_attempts =
        model == GuessModel::without_replacement ? (space + 1.0) / 2.0 : space;
    return estimate;
}

MonteCarloResult simulate_bruteforce(int bits, std::uint64_t trials,
                                     std::uint64_t seed, GuessModel model) {
    if (bits < 0 || bits > 24)
        throw std::out_of_range("simulation supports bits in [0, 24]");
    if (trials < 1) throw std::out_of_range("trials must be >= 1");

    const std::uint64_t space = 1ULL << bits;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::uint64_t state = seed ^ (trial * 0x9e3779b97f4a7c15ULL);
        double attempts;
        if (model == GuessModel::without_replacement) {
            // Guessing distinct slots in random order: the hidden slot's
            // position in the guess sequence is uniform over {1..N}.
            attempts = 1.0 + static_cast<double>(rng::splitmix64(state) % space);
        } else {
            // Each guess is an independent uniform draw; the attempt count
            // is geometric with p = 1/N. Sampled by inversion.
            if (bits == 0) {
                attempts = 1.0;
            } else {
                const double p = 1.0 / static_cast<double>(space);
                double u = 0.0;
                do {
                    u = static_cast<double>(rng::splitmix64(state) >> 11) *
                        0x1.0p-53;
                } while (u <= 0.0);
                attempts = std::floor(std::log(u) / std::log1p(-p)) + 1.0;
            }
        }
        sum += attempts;
        sum_sq += attempts * attempts;
    }
    MonteCarloResult result;
    result.trials = trials;
    result.seed = seed;
    result.mean_attempts = sum / static_cast<double>(trials);
    if (trials > 1) {
        const double n = static_cast<double>(trials);
        const double variance =
            (sum_sq - sum * sum / n) / (n - 1.0);
        result.std_error = std::sqrt(std::max(variance, 0.0) / n);
    }
    return result;
}

std::vector<CurvePoint> attempts_curve(int bits_min, int bits_max,
                                       GuessModel model) {
    if (bits_min < 0 || bits_max > 64 || bits_min > bits_max)
        throw std::out_of_range("curve range must satisfy 0 <= min <= max <= 64");
    std::vector<CurvePoint> points;
    points.reserve(static_cast<std::size_t>(bits_max - bits_min + 1));
    for (int b = bits_min; b <= bits_max; ++b)
        points.push_back({b, expected_attempts(b, model).expected_attempts});
    return points;
}

}  // namespace entrokit::aslr
