// Hybrid entropy-mixing generator family and the statistical test battery.
//
// Four generator kinds are modeled:
//   weak_baseline  - truncated LCG with deliberately biased low nibble
//   emn_low        - 256-bit mixing pool, 16 entropy bytes per 4096 output bytes
//   emn_high       - same pool, 16 entropy bytes per 256 output bytes
//   physical_only  - every byte drawn through the entropy source
//
// In seeded_pseudo_physical mode the whole family is reproducible
// bit-for-bit from (kind, seed). Generation cost is simulated from
// per-byte and per-injection costs so benchmark results are stable.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace entrokit::rng {

enum class GeneratorKind { weak_baseline, emn_low, emn_high, physical_only };

std::string to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

struct EntropySourceSpec {
    enum class Mode { system_jitter, seeded_pseudo_physical };
    Mode mode = Mode::seeded_pseudo_physical;
    std::uint64_t seed = 0;
    std::uint64_t per_byte_cost_ns = 28;  // simulated acquisition latency
};

struct EmnConfig {
    std::uint64_t injection_interval_bytes = 256;
    std::uint64_t injection_size_bytes = 16;
    EntropySourceSpec source;

    void validate() const;  // throws std::invalid_argument
};

struct RandomnessReport {
    double chi_squared_p_value = 0.0;
    double entropy_bits_per_byte = 0.0;
    std::optional<double> generation_time_factor;  // filled by benchmarks
    std::uint64_t sample_size_bytes = 0;
};

/// Abstraction over the "physical" entropy source. seeded_pseudo_physical
/// is a deterministic stream; system_jitter pulls from the OS.
class EntropySource {
public:
    explicit EntropySource(const EntropySourceSpec& spec);

    std::uint8_t next_byte();
    void fill(std::span<std::uint8_t> out);

    const EntropySourceSpec& spec() const { return spec_; }

private:
    EntropySourceSpec spec_;
    std::uint64_t state_ = 0;
};

/// 256-bit entropy mixing pool. Output words come from a xoshiro-style
/// permutation of the pool; mix() XOR-folds material into the pool and
/// applies two avalanche rounds.
class EmnPool {
public:
    explicit EmnPool(std::uint64_t seed);

    std::uint64_t next_word();

    /// Throws std::invalid_argument on empty material.
    void mix(std::span<const std::uint8_t> material);

    const std::array<std::uint64_t, 4>& words() const { return pool_; }

private:
    std::array<std::uint64_t, 4> pool_{};
};

/// Single-owner mutable generator state; not safe for concurrent mutation.
class Generator {
public:
    Generator(GeneratorKind kind, std::uint64_t seed);
    Generator(GeneratorKind kind, std::uint64_t seed, const EmnConfig& config);

    std::vector<std::uint8_t> next_block(std::size_t n);

    GeneratorKind kind() const { return kind_; }
    std::uint64_t bytes_drawn() const { return bytes_drawn_; }
    std::uint64_t injections_performed() const { return injections_; }

    /// Deterministic simulated generation cost for everything drawn so far.
    std::uint64_t simulated_cost_ns() const { return cost_ns_; }

    /// Folds material into the mixing pool (EMN kinds only).
    /// Throws std::logic_error for non-EMN kinds.
    void mix_entropy(std::span<const std::uint8_t> material);

    static EmnConfig default_config(GeneratorKind kind);

private:
    std::uint8_t next_byte();

    GeneratorKind kind_;
    EmnConfig config_;
    EmnPool pool_;
    EntropySource source_;
    std::uint64_t lcg_state_ = 0;
    std::uint64_t bytes_drawn_ = 0;
    std::uint64_t bytes_since_injection_ = 0;
    std::uint64_t injections_ = 0;
    std::uint64_t cost_ns_ = 0;
    std::uint64_t word_buffer_ = 0;
    int word_bytes_left_ = 0;
};

/// Chi-squared (256 bins, dof 255) plus byte entropy for one sample.
/// Throws std::invalid_argument below 4096 bytes.
RandomnessReport run_test_battery(std::span<const std::uint8_t> sample);

struct BenchmarkEntry {
    GeneratorKind kind;
    RandomnessReport report;
};

/// Draws n bytes from each kind with the given seed, runs the battery and
/// fills generation_time_factor normalized to weak_baseline = 1.00.
/// With wall_clock = true, factors come from real timing instead of the
/// simulated cost model.
std::vector<BenchmarkEntry> benchmark_generators(
    const std::vector<GeneratorKind>& kinds, std::size_t n, std::uint64_t seed,
    bool wall_clock = false);

/// splitmix64 step; shared by seed expansion and per-trial seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace entrokit::rng
