#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entrokit/randomness.hpp"

#include <bit>
#include <cstdint>
#include <vector>

using namespace entrokit::rng;

TEST_CASE("generator kind names round-trip") {
    for (GeneratorKind kind :
         {GeneratorKind::weak_baseline, GeneratorKind::emn_low,
          GeneratorKind::emn_high, GeneratorKind::physical_only})
        CHECK(generator_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(generator_kind_from_string("mersenne"),
                    std::invalid_argument);
}

TEST_CASE("same kind and seed reproduce the byte stream exactly") {
    for (GeneratorKind kind :
         {GeneratorKind::weak_baseline, GeneratorKind::emn_low,
          GeneratorKind::emn_high, GeneratorKind::physical_only}) {
        Generator a(kind, 77), b(kind, 77);
        CHECK(a.next_block(8192) == b.next_block(8192));
    }
}

TEST_CASE("different seeds diverge") {
    Generator a(GeneratorKind::emn_high, 1), b(GeneratorKind::emn_high, 2);
    CHECK(a.next_block(1024) != b.next_block(1024));
}

TEST_CASE("chunked draws equal one contiguous draw") {
    Generator whole(GeneratorKind::emn_high, 9);
    Generator chunked(GeneratorKind::emn_high, 9);
    const auto expect = whole.next_block(10000);
    std::vector<std::uint8_t> got;
    for (std::size_t step : {1000, 3000, 123, 5877})
        for (auto byte : chunked.next_block(step)) got.push_back(byte);
    CHECK(expect == got);
}

TEST_CASE("injection cadence follows the configured interval") {
    Generator high(GeneratorKind::emn_high, 5);
    high.next_block(4096);
    CHECK(high.injections_performed() == 4096 / 256);

    Generator low(GeneratorKind::emn_low, 5);
    low.next_block(4096);
    CHECK(low.injections_performed() == 1);

    Generator weak(GeneratorKind::weak_baseline, 5);
    weak.next_block(4096);
    CHECK(weak.injections_performed() == 0);
}

TEST_CASE("config validation") {
    EmnConfig config;
    config.injection_interval_bytes = 8;
    config.injection_size_bytes = 16;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.injection_interval_bytes = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = Generator::default_config(GeneratorKind::emn_high);
    CHECK_NOTHROW(config.validate());
    CHECK(config.injection_interval_bytes == 256);
    CHECK(Generator::default_config(GeneratorKind::emn_low)
              .injection_interval_bytes == 4096);
}

TEST_CASE("manual entropy mixing changes the stream and is EMN-only") {
    Generator plain(GeneratorKind::emn_high, 3);
    Generator mixed(GeneratorKind::emn_high, 3);
    const std::uint8_t material[4] = {0xde, 0xad, 0xbe, 0xef};
    mixed.mix_entropy(material);
    CHECK(plain.next_block(256) != mixed.next_block(256));

    Generator weak(GeneratorKind::weak_baseline, 3);
    CHECK_THROWS_AS(weak.mix_entropy(material), std::logic_error);
}

TEST_CASE("pool mixing avalanches on single-bit differences") {
    // Flipping one bit of the injected material should flip about half of
    // the 64 output bits: mean Hamming distance 32 +- 4 over 1000 trials,
    // with essentially every trial producing a different word.
    std::uint64_t seed_state = 99;
    std::uint64_t total_distance = 0;
    int differing = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t pool_seed = splitmix64(seed_state);
        EmnPool a(pool_seed), b(pool_seed);
        std::uint8_t material[16];
        std::uint64_t m = pool_seed ^ 0x1234;
        for (auto& byte : material)
            byte = static_cast<std::uint8_t>(splitmix64(m) >> 56);
        a.mix(material);
        material[trial % 16] ^=
            static_cast<std::uint8_t>(1u << (trial % 8));
        b.mix(material);
        const std::uint64_t wa = a.next_word();
        const std::uint64_t wb = b.next_word();
        total_distance += std::popcount(wa ^ wb);
        if (wa != wb) ++differing;
    }
    const double mean = static_cast<double>(total_distance) / trials;
    CHECK(mean > 28.0);
    CHECK(mean < 36.0);
    CHECK(differing >= trials - 1);
}

TEST_CASE("pool rejects empty material") {
    EmnPool pool(1);
    CHECK_THROWS_AS(pool.mix({}), std::invalid_argument);
}

TEST_CASE("test battery rejects undersized samples") {
    std::vector<std::uint8_t> sample(4095, 0);
    CHECK_THROWS_AS(run_test_battery(sample), std::invalid_argument);
}

TEST_CASE("battery entropy levels match the design targets") {
    const std::size_t n = 65536;
    Generator weak(GeneratorKind::weak_baseline, 11);
    const auto weak_report = run_test_battery(weak.next_block(n));
    CHECK(weak_report.entropy_bits_per_byte >= 7.0);
    CHECK(weak_report.entropy_bits_per_byte <= 7.4);
    CHECK(weak_report.chi_squared_p_value < 0.001);

    Generator low(GeneratorKind::emn_low, 11);
    const auto low_report = run_test_battery(low.next_block(n));
    Generator high(GeneratorKind::emn_high, 11);
    const auto high_report = run_test_battery(high.next_block(n));
    CHECK(low_report.entropy_bits_per_byte >
          weak_report.entropy_bits_per_byte);
    CHECK(high_report.entropy_bits_per_byte >=
          low_report.entropy_bits_per_byte);
    CHECK(high_report.entropy_bits_per_byte >= 7.98);
}

TEST_CASE("simulated generation-time factors match the cost model") {
    const std::size_t n = 65536;
    const auto entries = benchmark_generators(
        {GeneratorKind::weak_baseline, GeneratorKind::emn_low,
         GeneratorKind::emn_high, GeneratorKind::physical_only},
        n, 123);
    REQUIRE(entries.size() == 4);
    const double f0 = *entries[0].report.generation_time_factor;
    const double f1 = *entries[1].report.generation_time_factor;
    const double f2 = *entries[2].report.generation_time_factor;
    const double f3 = *entries[3].report.generation_time_factor;
    // 10 ns/byte core; EMN adds (16*28 + 600) ns per injection; the
    // physical source costs 28 ns/byte on top of the core cost.
    CHECK(f0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f1 == doctest::Approx(1.0 + 1048.0 / 40960.0).epsilon(1e-9));
    CHECK(f2 == doctest::Approx(1.0 + 1048.0 / 2560.0).epsilon(1e-9));
    CHECK(f3 == doctest::Approx(3.8).epsilon(1e-12));
    CHECK(f0 < f1);
    CHECK(f1 < f2);
    CHECK(f2 < f3);
}

TEST_CASE("splitmix64 is a deterministic stream") {
    std::uint64_t s1 = 42, s2 = 42;
    for (int i = 0; i < 16; ++i) CHECK(splitmix64(s1) == splitmix64(s2));
}
