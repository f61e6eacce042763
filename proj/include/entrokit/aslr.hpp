// Analytic and Monte Carlo model of brute-force cost against address
// space randomization.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entrokit::aslr {

struct AslrProfile {
    std::string os_name;
    int stack_bits = 0;
    int heap_bits = 0;
    int library_bits = 0;
};

enum class GuessModel {
    without_replacement,  // expected (2^bits + 1) / 2
    with_replacement,     // expected 2^bits
};

std::string to_string(GuessModel model);
GuessModel guess_model_from_string(const std::string& name);

struct AttemptEstimate {
    int bits = 0;
    double expected_attempts = 1.0;
    GuessModel model = GuessModel::without_replacement;
};

struct MonteCarloResult {
    std::uint64_t trials = 0;
    double mean_attempts = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

struct CurvePoint {
    int bits = 0;
    double expected_attempts = 1.0;
};

/// Stack/heap/library entropy bits for the four reference operating systems.
std::vector<AslrProfile> builtin_profiles();

/// Throws std::out_of_range outside bits in [0, 64].
AttemptEstimate expected_attempts(int bits, GuessModel model);

/// Empirical attempt count over independent trials against a uniformly
/// hidden target in a space of 2^bits slots. Per-trial seeds derive from
/// (seed, trial_index), so results do not depend on execution order.
/// Throws std::out_of_range for bits > 24 (desk-scale guard) or trials < 1.
MonteCarloResult simulate_bruteforce(int bits, std::uint64_t trials,
                                     std::uint64_t seed, GuessModel model);

/// Expected-attempt series over an inclusive bit range.
std::vector<CurvePoint> attempts_curve(int bits_min, int bits_max,
                                       GuessModel model);

}  // namespace entrokit::aslr
