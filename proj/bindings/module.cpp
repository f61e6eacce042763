// Python bindings for the entrokit core library.

#include "entrokit/aslr.hpp"
#include "entrokit/detectors.hpp"
#include "entrokit/entropy.hpp"
#include "entrokit/gamma.hpp"
#include "entrokit/mtd.hpp"
#include "entrokit/randomness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

std::vector<std::uint8_t> to_bytes(const py::bytes& data) {
    const std::string view = data;
    return std::vector<std::uint8_t>(view.begin(), view.end());
}

}  // namespace

PYBIND11_MODULE(_entrokit, m) {
    m.doc() = "entropy-injection analysis toolkit";

    // --- entropy core ------------------------------------------------------
    m.def(
        "shannon_entropy",
        [](const py::bytes& data) {
            const auto bytes = to_bytes(data);
            return entrokit::shannon_entropy(
                       std::span<const std::uint8_t>(bytes.data(),
                                                     bytes.size()))
                .entropy_bits_per_symbol;
        },
        py::arg("data"),
        "Shannon entropy of a byte string, in bits per byte.");
    m.def(
        "relative_entropy",
        [](const std::vector<double>& p, const std::vector<double>& q,
           double smoothing) {
            entrokit::ProbabilityDistribution dp, dq;
            dp.probabilities = p;
            dq.probabilities = q;
            return entrokit::relative_entropy(dp, dq, smoothing);
        },
        py::arg("p"), py::arg("q"), py::arg("smoothing") = 0.0,
        "Kullback-Leibler divergence D(p || q) in bits, with additive "
        "smoothing applied to q.");
    m.def("regularized_lower_incomplete_gamma",
          &entrokit::regularized_lower_incomplete_gamma, py::arg("s"),
          py::arg("x"));
    m.def("chi_squared_p_value", &entrokit::chi_squared_p_value,
          py::arg("statistic"), py::arg("dof"));

    // --- randomness --------------------------------------------------------
    m.def(
        "generate",
        [](const std::string& kind, std::uint64_t seed, std::size_t n) {
            entrokit::rng::Generator gen(
                entrokit::rng::generator_kind_from_string(kind), seed);
            const auto block = gen.next_block(n);
            return py::bytes(reinterpret_cast<const char*>(block.data()),
                             block.size());
        },
        py::arg("kind"), py::arg("seed"), py::arg("n"),
        "Draw n bytes from a named generator "
        "(weak_baseline|emn_low|emn_high|physical_only).");
    m.def(
        "run_test_battery",
        [](const py::bytes& sample) {
            const auto bytes = to_bytes(sample);
            const auto report = entrokit::rng::run_test_battery(
                std::span<const std::uint8_t>(bytes.data(), bytes.size()));
            py::dict out;
            out["chi_squared_p_value"] = report.chi_squared_p_value;
            out["entropy_bits_per_byte"] = report.entropy_bits_per_byte;
            out["sample_size_bytes"] = report.sample_size_bytes;
            return out;
        },
        py::arg("sample"),
        "Chi-squared and entropy battery over a byte sample (>= 4096 bytes).");
    m.def(
        "benchmark_generators",
        [](std::size_t n, std::uint64_t seed) {
            py::list rows;
            for (const auto& entry : entrokit::rng::benchmark_generators(
                     {entrokit::rng::GeneratorKind::weak_baseline,
                      entrokit::rng::GeneratorKind::emn_low,
                      entrokit::rng::GeneratorKind::emn_high,
                      entrokit::rng::GeneratorKind::physical_only},
                     n, seed)) {
                py::dict row;
                row["generator"] = entrokit::rng::to_string(entry.kind);
                row["chi_squared_p_value"] = entry.report.chi_squared_p_value;
                row["entropy_bits_per_byte"] =
                    entry.report.entropy_bits_per_byte;
                row["generation_time_factor"] =
                    *entry.report.generation_time_factor;
                rows.append(row);
            }
            return rows;
        },
        py::arg("n") = 65536, py::arg("seed") = 12345,
        "Four-generator comparison with simulated cost factors.");

    // --- aslr --------------------------------------------------------------
    m.def(
        "aslr_profiles",
        [] {
            py::list rows;
            for (const auto& p : entrokit::aslr::builtin_profiles()) {
                py::dict row;
                row["os_name"] = p.os_name;
                row["stack_bits"] = p.stack_bits;
                row["heap_bits"] = p.heap_bits;
                row["library_bits"] = p.library_bits;
                rows.append(row);
            }
            return rows;
        },
        "Per-OS ASLR entropy bits (stack, heap, libraries).");
    m.def(
        "aslr_expected_attempts",
        [](int bits, const std::string& model) {
            return entrokit::aslr::expected_attempts(
                       bits, entrokit::aslr::guess_model_from_string(model))
                .expected_attempts;
        },
        py::arg("bits"), py::arg("model") = "without_replacement");
    m.def(
        "aslr_simulate",
        [](int bits, std::uint64_t trials, std::uint64_t seed,
           const std::string& model) {
            const auto result = entrokit::aslr::simulate_bruteforce(
                bits, trials, seed,
                entrokit::aslr::guess_model_from_string(model));
            py::dict out;
            out["trials"] = result.trials;
            out["mean_attempts"] = result.mean_attempts;
            out["std_error"] = result.std_error;
            out["seed"] = result.seed;
            return out;
        },
        py::arg("bits"), py::arg("trials"), py::arg("seed") = 12345,
        py::arg("model") = "without_replacement");

    // --- mtd ---------------------------------------------------------------
    m.def(
        "mtd_run_scenario",
        [](const std::string& scenario_json,
           std::optional<std::uint64_t> trials,
           std::optional<std::uint64_t> seed) {
            auto scenario = entrokit::mtd::parse_scenario(scenario_json);
            if (trials) scenario.trials = *trials;
            if (seed) scenario.seed = *seed;
            const auto result = entrokit::mtd::run_simulation(
                scenario.strategy, scenario.attacker, scenario.duration_s,
                scenario.trials, scenario.seed);
            py::dict out;
            out["attack_success_rate"] = result.attack_success_rate;
            out["mean_time_to_compromise_s"] =
                result.mean_time_to_compromise_s
                    ? py::object(py::float_(*result.mean_time_to_compromise_s))
                    : py::object(py::none());
            out["latency_overhead_pct"] = result.latency_overhead_pct;
            out["throughput_reduction_pct"] = result.throughput_reduction_pct;
            out["config_entropy_bits"] = result.config_entropy_bits;
            out["trials"] = result.trials;
            out["seed"] = result.seed;
            return out;
        },
        py::arg("scenario_json"), py::arg("trials") = std::nullopt,
        py::arg("seed") = std::nullopt,
        "Simulate a JSON scenario string and return the result dict.");
    m.def("mtd_preset_names", &entrokit::mtd::preset_names);
    m.def(
        "mtd_compare",
        [](const std::vector<std::string>& names, std::uint64_t trials,
           std::uint64_t seed) {
            py::list rows;
            for (const auto& r :
                 entrokit::mtd::compare_strategies(names, trials, seed)) {
                py::dict row;
                row["name"] = r.name;
                row["attack_success_rate"] = r.attack_success_rate;
                row["static_success_rate"] = r.static_success_rate;
                row["attack_reduction_pct"] = r.attack_reduction_pct;
                row["latency_overhead_pct"] = r.latency_overhead_pct;
                row["throughput_reduction_pct"] = r.throughput_reduction_pct;
                row["config_entropy_bits"] = r.config_entropy_bits;
                rows.append(row);
            }
            return rows;
        },
        py::arg("names"), py::arg("trials") = 0, py::arg("seed") = 12345,
        "Preset comparison against static twins; trials=0 keeps each "
        "preset's own trial count.");

    // --- detectors ---------------------------------------------------------
    m.def(
        "evaluate_domain",
        [](const std::string& domain, std::optional<double> threshold) {
            const auto verdict =
                entrokit::detect::evaluate_domain(domain, threshold);
            py::dict out;
            out["domain"] = verdict.domain;
            out["score_bits"] = verdict.score_bits;
            out["threshold_bits"] = verdict.threshold_bits;
            out["suspicious"] =
                verdict.label == entrokit::detect::DomainLabel::suspicious;
            out["scored_label"] = verdict.scored_label;
            out["effective_label_length"] = verdict.effective_label_length;
            return out;
        },
        py::arg("domain"), py::arg("threshold") = std::nullopt,
        "Score and classify one domain against the shipped baseline.");
    m.def(
        "scan_path",
        [](const std::filesystem::path& root, double threshold,
           std::uint64_t min_size) {
            entrokit::detect::ScanPolicy policy;
            policy.threshold_bits_per_byte = threshold;
            policy.min_size_bytes = min_size;
            py::list rows;
            for (const auto& f : entrokit::detect::scan_path(root, policy)) {
                py::dict row;
                row["path"] = f.path;
                row["entropy_bits_per_byte"] = f.entropy_bits_per_byte;
                row["size_bytes"] = f.size_bytes;
                row["label"] = entrokit::detect::to_string(f.label);
                if (!f.skip_reason.empty())
                    row["skip_reason"] = f.skip_reason;
                rows.append(row);
            }
            return rows;
        },
        py::arg("root"), py::arg("threshold") = 7.2,
        py::arg("min_size") = 1024,
        "Entropy scan of a file or directory tree, one dict per file.");
}
