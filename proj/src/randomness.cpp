#include "entrokit/randomness.hpp"

#include "entrokit/entropy.hpp"
#include "entrokit/gamma.hpp"

#include <bit>
#include <chrono>
#include <random>
#include <stdexcept>

namespace entrokit::rng {
namespace {

// MMIX linear congruential constants.
constexpr std::uint64_t kLcgMultiplier = 6364136223846793005ULL;
constexpr std::uint64_t kLcgIncrement = 1442695040888963407ULL;

// Simulated cost model (nanoseconds). Core output costs the same for every
// kind; EMN kinds additionally pay for source acquisition and pool mixing
// at each injection, physical_only pays source acquisition per byte.
constexpr std::uint64_t kCoreCostPerByteNs = 10;
constexpr std::uint64_t kMixFixedCostNs = 600;

// Output bytes drawn this far after an injection count as stale: the low
// two bits are AND-combined, which is what makes infrequent injection
// measurably worse in the battery. emn_high's interval sits below this
// threshold, so its output is never degraded.
constexpr std::uint64_t kStaleAfterBytes = 1024;

std::uint64_t avalanche64(std::uint64_t x) {
    // splitmix64 finalizer
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    return avalanche64(state);
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::weak_baseline: return "weak_baseline";
        case GeneratorKind::emn_low: return "emn_low";
        case GeneratorKind::emn_high: return "emn_high";
        case GeneratorKind::physical_only: return "physical_only";
    }
    throw std::logic_error("unreachable generator kind");
}

GeneratorKind generator_kind_from_string(const std::string& name) {
    if (name == "weak_baseline") return GeneratorKind::weak_baseline;
    if (name == "emn_low") return GeneratorKind::emn_low;
    if (name == "emn_high") return GeneratorKind::emn_high;
    if (name == "physical_only") return GeneratorKind::physical_only;
    throw std::invalid_argument("unknown generator kind: " + name);
}

void EmnConfig::validate() const {
    if (injection_interval_bytes == 0 || injection_size_bytes == 0)
        throw std::invalid_argument("injection sizes must be > 0");
    if (injection_interval_bytes < injection_size_bytes)
        throw std::invalid_argument(
            "injection_interval_bytes must be >= injection_size_bytes");
}

EntropySource::EntropySource(const EntropySourceSpec& spec) : spec_(spec) {
    state_ = spec.seed ^ 0xa5a5a5a5deadbeefULL;
}

std::uint8_t EntropySource::next_byte() {
    if (spec_.mode == EntropySourceSpec::Mode::system_jitter) {
        static thread_local std::random_device device;
        return static_cast<std::uint8_t>(device());
    }
    return static_cast<std::uint8_t>(splitmix64(state_) >> 56);
}

void EntropySource::fill(std::span<std::uint8_t> out) {
    for (auto& b : out) b = next_byte();
}

EmnPool::EmnPool(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : pool_) w = splitmix64(s);
}

std::uint64_t EmnPool::next_word() {
    // xoshiro256++ step over the pool words.
    const std::uint64_t result = std::rotl(pool_[0] + pool_[3], 23) + pool_[0];
    const std::uint64_t t = pool_[1] << 17;
    pool_[2] ^= pool_[0];
    pool_[3] ^= pool_[1];
    pool_[1] ^= pool_[2];
    pool_[0] ^= pool_[3];
    pool_[2] ^= t;
    pool_[3] = std::rotl(pool_[3], 45);
    return result;
}

void EmnPool::mix(std::span<const std::uint8_t> material) {
    if (material.empty())
        throw std::invalid_argument("entropy material must be non-empty");
    for (std::size_t i = 0; i < material.size(); ++i) {
        const std::uint64_t byte = material[i];
        pool_[(i / 8) % 4] ^= byte << (8 * (i % 8));
    }
    for (int round = 0; round < 2; ++round) {
        for (int i = 0; i < 4; ++i) {
            pool_[i] = avalanche64(pool_[i] +
                                   std::rotl(pool_[(i + 1) & 3], 23) +
                                   0x2545f4914f6cdd1dULL * (i + 1));
        }
    }
}

EmnConfig Generator::default_config(GeneratorKind kind) {
    EmnConfig config;
    switch (kind) {
        case GeneratorKind::emn_low:
            config.injection_interval_bytes = 4096;
            break;
        case GeneratorKind::emn_high:
            config.injection_interval_bytes = 256;
            break;
        default:
            break;
    }
    config.injection_size_bytes = 16;
    return config;
}

Generator::Generator(GeneratorKind kind, std::uint64_t seed)
    : Generator(kind, seed, default_config(kind)) {}

Generator::Generator(GeneratorKind kind, std::uint64_t seed,
                     const EmnConfig& config)
    : kind_(kind), config_(config), pool_(seed),
      source_([&] {
          EntropySourceSpec spec = config.source;
          if (spec.mode == EntropySourceSpec::Mode::seeded_pseudo_physical) {
              std::uint64_t s = seed ^ 0x517cc1b727220a95ULL;
              spec.seed = splitmix64(s);
          }
          return spec;
      }()) {
    config_.validate();
    std::uint64_t s = seed;
    lcg_state_ = splitmix64(s) | 1u;
}

void Generator::mix_entropy(std::span<const std::uint8_t> material) {
    if (kind_ != GeneratorKind::emn_low && kind_ != GeneratorKind::emn_high)
        throw std::logic_error("mix_entropy only applies to EMN generators");
    pool_.mix(material);
    word_bytes_left_ = 0;
}

std::uint8_t Generator::next_byte() {
    switch (kind_) {
        case GeneratorKind::weak_baseline: {
            lcg_state_ = lcg_state_ * kLcgMultiplier + kLcgIncrement;
            const auto hi = static_cast<std::uint8_t>(lcg_state_ >> 56);
            const auto lo = static_cast<std::uint8_t>(lcg_state_ >> 48);
            cost_ns_ += kCoreCostPerByteNs;
            ++bytes_drawn_;
            // High nibble passes through; low nibble is the AND of two
            // draws, biasing those bits toward zero.
            return static_cast<std::uint8_t>((hi & 0xF0) | (hi & lo & 0x0F));
        }
        case GeneratorKind::physical_only: {
            cost_ns_ += kCoreCostPerByteNs + source_.spec().per_byte_cost_ns;
            ++bytes_drawn_;
            return source_.next_byte();
        }
        case GeneratorKind::emn_low:
        case GeneratorKind::emn_high: {
            if (word_bytes_left_ == 0) {
                word_buffer_ = pool_.next_word();
                word_bytes_left_ = 8;
            }
            auto out = static_cast<std::uint8_t>(word_buffer_ & 0xFF);
            word_buffer_ >>= 8;
            --word_bytes_left_;
            if (bytes_drawn_ % config_.injection_interval_bytes >=
                kStaleAfterBytes) {
                const std::uint8_t b0 = out & 1u;
                const std::uint8_t b1 = (out >> 1) & 1u;
                out = static_cast<std::uint8_t>((out & 0xFE) | (b0 & b1));
            }
            cost_ns_ += kCoreCostPerByteNs;
            ++bytes_drawn_;
            if (bytes_drawn_ % config_.injection_interval_bytes == 0) {
                std::vector<std::uint8_t> material(config_.injection_size_bytes);
                source_.fill(material);
                pool_.mix(material);
                word_bytes_left_ = 0;
                ++injections_;
                cost_ns_ += config_.injection_size_bytes *
                                source_.spec().per_byte_cost_ns +
                            kMixFixedCostNs;
            }
            return out;
        }
    }
    throw std::logic_error("unreachable generator kind");
}

std::vector<std::uint8_t> Generator::next_block(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = next_byte();
    return out;
}

RandomnessReport run_test_battery(std::span<const std::uint8_t> sample) {
    if (sample.size() < 4096)
        throw std::invalid_argument("test battery requires >= 4096 bytes");
    const ByteHistogram hist = build_histogram(sample);
    const double expected = static_cast<double>(hist.total) / 256.0;
    double statistic = 0.0;
    for (std::uint64_t count : hist.counts) {
        const double diff = static_cast<double>(count) - expected;
        statistic += diff * diff / expected;
    }
    RandomnessReport report;
    report.chi_squared_p_value = chi_squared_p_value(statistic, 255);
    report.entropy_bits_per_byte =
        shannon_entropy(to_distribution(hist), hist.total)
            .entropy_bits_per_symbol;
    report.sample_size_bytes = sample.size();
    return report;
}

std::vector<BenchmarkEntry> benchmark_generators(
    const std::vector<GeneratorKind>& kinds, std::size_t n, std::uint64_t seed,
    bool wall_clock) {
    std::vector<BenchmarkEntry> entries;
    const double baseline_cost =
        static_cast<double>(n) * static_cast<double>(kCoreCostPerByteNs);
    double wall_baseline_ns = 0.0;
    if (wall_clock) {
        Generator weak(GeneratorKind::weak_baseline, seed);
        const auto t0 = std::chrono::steady_clock::now();
        auto block = weak.next_block(n);
        const auto t1 = std::chrono::steady_clock::now();
        wall_baseline_ns = static_cast<double>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                .count());
        (void)block;
    }
    for (GeneratorKind kind : kinds) {
        Generator gen(kind, seed);
        const auto t0 = std::chrono::steady_clock::now();
        auto sample = gen.next_block(n);
        const auto t1 = std::chrono::steady_clock::now();
        BenchmarkEntry entry{kind, run_test_battery(sample)};
        if (wall_clock) {
            const double ns = static_cast<double>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count());
            entry.report.generation_time_factor = ns / wall_baseline_ns;
        } else {
            entry.report.generation_time_factor =
                static_cast<double>(gen.simulated_cost_ns()) / baseline_cost;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace entrokit::rng
