#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entrokit/aslr.hpp"

#include <cmath>
#include <stdexcept>

using namespace entrokit::aslr;

TEST_CASE("builtin profiles carry the reference entropy levels") {
    const auto profiles = builtin_profiles();
    REQUIRE(profiles.size() == 4);
    CHECK(profiles[0].os_name == "Windows 10");
    CHECK(profiles[0].stack_bits == 19);
    CHECK(profiles[0].heap_bits == 24);
    CHECK(profiles[0].library_bits == 19);
    CHECK(profiles[1].os_name == "Linux (x86-64)");
    CHECK(profiles[1].stack_bits == 22);
    CHECK(profiles[1].heap_bits == 13);
    CHECK(profiles[1].library_bits == 28);
    CHECK(profiles[2].os_name == "macOS");
    CHECK(profiles[2].stack_bits == 16);
    CHECK(profiles[2].heap_bits == 14);
    CHECK(profiles[2].library_bits == 16);
    CHECK(profiles[3].os_name == "Android 11+");
    CHECK(profiles[3].stack_bits == 24);
    CHECK(profiles[3].heap_bits == 16);
    CHECK(profiles[3].library_bits == 24);
}

TEST_CASE("guess model names round-trip") {
    CHECK(guess_model_from_string(to_string(GuessModel::without_replacement)) ==
          GuessModel::without_replacement);
    CHECK(guess_model_from_string(to_string(GuessModel::with_replacement)) ==
          GuessModel::with_replacement);
    CHECK_THROWS_AS(guess_model_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("analytic expected attempts, both models") {
    CHECK(expected_attempts(16, GuessModel::without_replacement)
              .expected_attempts == 32768.5);
    CHECK(expected_attempts(28, GuessModel::without_replacement)
              .expected_attempts == 134217728.5);
    CHECK(expected_attempts(0, GuessModel::without_replacement)
              .expected_attempts == 1.0);
    CHECK(expected_attempts(16, GuessModel::with_replacement)
              .expected_attempts == 65536.0);
    CHECK(expected_attempts(0, GuessModel::with_replacement)
              .expected_attempts == 1.0);
}

TEST_CASE("attempt estimates double with each added bit") {
    const auto curve = attempts_curve(4, 24, GuessModel::without_replacement);
    REQUIRE(curve.size() == 21);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const int bits = curve[i].bits;
        CHECK(bits == 4 + static_cast<int>(i));
        // Exact closed form (2^bits + 1) / 2 at every point.
        CHECK(curve[i].expected_attempts ==
              (std::ldexp(1.0, bits) + 1.0) / 2.0);
        if (i > 0) {
            const double ratio =
                curve[i].expected_attempts / curve[i - 1].expected_attempts;
            CHECK(ratio < 2.0);
            CHECK(ratio > 1.9);
        }
    }
}

TEST_CASE("argument guards") {
    CHECK_THROWS_AS(expected_attempts(-1, GuessModel::without_replacement),
                    std::out_of_range);
    CHECK_THROWS_AS(expected_attempts(65, GuessModel::without_replacement),
                    std::out_of_range);
    CHECK_THROWS_AS(
        simulate_bruteforce(25, 10, 1, GuessModel::without_replacement),
        std::out_of_range);
    CHECK_THROWS_AS(
        simulate_bruteforce(8, 0, 1, GuessModel::without_replacement),
        std::out_of_range);
}

TEST_CASE("Monte Carlo agrees with the analytic oracle") {
    for (GuessModel model :
         {GuessModel::without_replacement, GuessModel::with_replacement}) {
        for (int bits : {4, 8, 12}) {
            const auto result = simulate_bruteforce(bits, 20000, 31337, model);
            const double expected = expected_attempts(bits, model)
                                        .expected_attempts;
            CHECK(std::fabs(result.mean_attempts - expected) <=
                  3.0 * result.std_error);
        }
    }
}

TEST_CASE("simulation is deterministic in the seed") {
    const auto a = simulate_bruteforce(10, 5000, 7,
                                       GuessModel::without_replacement);
    const auto b = simulate_bruteforce(10, 5000, 7,
                                       GuessModel::without_replacement);
    CHECK(a.mean_attempts == b.mean_attempts);
    CHECK(a.std_error == b.std_error);
    const auto c = simulate_bruteforce(10, 5000, 8,
                                       GuessModel::without_replacement);
    CHECK(a.mean_attempts != c.mean_attempts);
}

TEST_CASE("without-replacement attempts never exceed the space size") {
    const auto result = simulate_bruteforce(6, 5000, 3,
                                            GuessModel::without_replacement);
    // Mean of a uniform {1..64} variable lies inside [1, 64].
    CHECK(result.mean_attempts >= 1.0);
    CHECK(result.mean_attempts <= 64.0);
}
