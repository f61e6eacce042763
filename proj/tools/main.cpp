// entrokit - entropy-injection analysis toolkit CLI.
//
// Subcommands: entropy, rngtest, aslr, mtd, dga, scan.
// Exit codes: 0 success, 1 detector-positive, 2 validation/usage error,
// 3 internal error.

#include "entrokit/aslr.hpp"
#include "entrokit/data_dir.hpp"
#include "entrokit/detectors.hpp"
#include "entrokit/entropy.hpp"
#include "entrokit/mtd.hpp"
#include "entrokit/randomness.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

constexpr int kExitSuccess = 0;
constexpr int kExitDetectorPositive = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr std::uint64_t kDefaultSeed = 12345;

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
};

std::string fixed(double value, int digits = 6) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
    return buffer;
}

void emit(const GlobalOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + opts.out_path);
    out << payload;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    return data;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// --- entropy ---------------------------------------------------------------

int cmd_entropy(const GlobalOptions& opts, const std::string& path) {
    const auto data = read_file_bytes(path);
    const auto report = entrokit::shannon_entropy(
        std::span<const std::uint8_t>(data.data(), data.size()));
    if (opts.format == "json") {
        json doc{{"path", path},
                 {"entropy_bits_per_symbol", report.entropy_bits_per_symbol},
                 {"sample_size", report.sample_size},
                 {"alphabet_size", report.alphabet_size}};
        emit(opts, doc.dump(2) + "\n");
    } else if (opts.format == "csv") {
        emit(opts, "path,entropy_bits_per_symbol,sample_size,alphabet_size\n" +
                       path + "," + fixed(report.entropy_bits_per_symbol, 4) +
                       "," + std::to_string(report.sample_size) + ",256\n");
    } else {
        emit(opts, path + ": " + fixed(report.entropy_bits_per_symbol, 4) +
                       " bits/byte over " + std::to_string(report.sample_size) +
                       " bytes\n");
    }
    return kExitSuccess;
}

// --- rngtest ---------------------------------------------------------------

json report_to_json(const std::string& name,
                    const entrokit::rng::RandomnessReport& r) {
    json doc{{"generator", name},
             {"chi_squared_p_value", r.chi_squared_p_value},
             {"entropy_bits_per_byte", r.entropy_bits_per_byte},
             {"sample_size_bytes", r.sample_size_bytes}};
    doc["generation_time_factor"] =
        r.generation_time_factor ? json(*r.generation_time_factor)
                                 : json(nullptr);
    return doc;
}

int cmd_rngtest(const GlobalOptions& opts, const std::string& kind_name,
                bool all, std::size_t bytes, const std::string& raw_out,
                bool wall_clock) {
    using namespace entrokit::rng;
    if (bytes < 4096)
        throw std::invalid_argument("sample must be at least 4096 bytes");

    std::vector<GeneratorKind> kinds;
    if (all) {
        kinds = {GeneratorKind::weak_baseline, GeneratorKind::emn_low,
                 GeneratorKind::emn_high, GeneratorKind::physical_only};
    } else {
        kinds = {generator_kind_from_string(kind_name)};
    }

    if (!raw_out.empty()) {
        Generator gen(kinds.front(), opts.seed);
        const auto sample = gen.next_block(bytes);
        std::ofstream out(raw_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + raw_out);
        out.write(reinterpret_cast<const char*>(sample.data()),
                  static_cast<std::streamsize>(sample.size()));
    }

    const auto entries = benchmark_generators(kinds, bytes, opts.seed,
                                              wall_clock);
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& e : entries)
            rows.push_back(report_to_json(to_string(e.kind), e.report));
        emit(opts, rows.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string payload =
            "generator,chi_squared_p_value,entropy_bits_per_byte,"
            "generation_time_factor,sample_size_bytes\n";
        for (const auto& e : entries)
            payload += to_string(e.kind) + "," +
                       fixed(e.report.chi_squared_p_value) + "," +
                       fixed(e.report.entropy_bits_per_byte) + "," +
                       fixed(e.report.generation_time_factor.value_or(0.0), 2) +
                       "," + std::to_string(e.report.sample_size_bytes) + "\n";
        emit(opts, payload);
    } else {
        std::string payload =
            "generator        p-value   entropy   time-factor\n";
        for (const auto& e : entries) {
            char line[128];
            std::snprintf(line, sizeof(line), "%-16s %.4f    %.4f    %.2fx\n",
                          to_string(e.kind).c_str(),
                          e.report.chi_squared_p_value,
                          e.report.entropy_bits_per_byte,
                          e.report.generation_time_factor.value_or(0.0));
            payload += line;
        }
        emit(opts, payload);
    }
    return kExitSuccess;
}

// --- aslr ------------------------------------------------------------------

int cmd_aslr_table(const GlobalOptions& opts) {
    const auto profiles = entrokit::aslr::builtin_profiles();
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& p : profiles)
            rows.push_back({{"os_name", p.os_name},
                            {"stack_bits", p.stack_bits},
                            {"heap_bits", p.heap_bits},
                            {"library_bits", p.library_bits}});
        emit(opts, rows.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string payload = "os_name,stack_bits,heap_bits,library_bits\n";
        for (const auto& p : profiles)
            payload += p.os_name + "," + std::to_string(p.stack_bits) + "," +
                       std::to_string(p.heap_bits) + "," +
                       std::to_string(p.library_bits) + "\n";
        emit(opts, payload);
    } else {
        std::string payload = "OS               Stack  Heap  Libraries\n";
        for (const auto& p : profiles) {
            char line[128];
            std::snprintf(line, sizeof(line), "%-16s %5d %5d %10d\n",
                          p.os_name.c_str(), p.stack_bits, p.heap_bits,
                          p.library_bits);
            payload += line;
        }
        emit(opts, payload);
    }
    return kExitSuccess;
}

int cmd_aslr_estimate(const GlobalOptions& opts, int bits,
                      entrokit::aslr::GuessModel model) {
    const auto estimate = entrokit::aslr::expected_attempts(bits, model);
    if (opts.format == "json") {
        json doc{{"bits", estimate.bits},
                 {"expected_attempts", estimate.expected_attempts},
                 {"model", entrokit::aslr::to_string(estimate.model)}};
        emit(opts, doc.dump(2) + "\n");
    } else if (opts.format == "csv") {
        emit(opts, "bits,expected_attempts,model\n" + std::to_string(bits) +
                       "," + fixed(estimate.expected_attempts, 1) + "," +
                       entrokit::aslr::to_string(model) + "\n");
    } else {
        emit(opts, std::to_string(bits) + " bits -> " +
                       fixed(estimate.expected_attempts, 1) +
                       " expected attempts (" +
                       entrokit::aslr::to_string(model) + ")\n");
    }
    return kExitSuccess;
}

int cmd_aslr_curve(const GlobalOptions& opts, int bits_min, int bits_max,
                   entrokit::aslr::GuessModel model) {
    const auto points = entrokit::aslr::attempts_curve(bits_min, bits_max,
                                                       model);
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& p : points)
            rows.push_back({{"bits", p.bits},
                            {"expected_attempts", p.expected_attempts},
                            {"model", entrokit::aslr::to_string(model)}});
        emit(opts, rows.dump(2) + "\n");
    } else {
        // curve output defaults to figure-ready CSV
        std::string payload = "bits,expected_attempts,model\n";
        for (const auto& p : points)
            payload += std::to_string(p.bits) + "," +
                       fixed(p.expected_attempts, 1) + "," +
                       entrokit::aslr::to_string(model) + "\n";
        emit(opts, payload);
    }
    return kExitSuccess;
}

int cmd_aslr_simulate(const GlobalOptions& opts, int bits,
                      std::uint64_t trials,
                      entrokit::aslr::GuessModel model) {
    const auto result =
        entrokit::aslr::simulate_bruteforce(bits, trials, opts.seed, model);
    const auto analytic = entrokit::aslr::expected_attempts(bits, model);
    if (opts.format == "json") {
        json doc{{"bits", bits},
                 {"trials", result.trials},
                 {"mean_attempts", result.mean_attempts},
                 {"std_error", result.std_error},
                 {"seed", result.seed},
                 {"analytic_expected", analytic.expected_attempts},
                 {"model", entrokit::aslr::to_string(model)}};
        emit(opts, doc.dump(2) + "\n");
    } else {
        emit(opts, "bits " + std::to_string(bits) + ": mean " +
                       fixed(result.mean_attempts, 2) + " +- " +
                       fixed(result.std_error, 2) + " over " +
                       std::to_string(result.trials) + " trials (analytic " +
                       fixed(analytic.expected_attempts, 1) + ", " +
                       entrokit::aslr::to_string(model) + ")\n");
    }
    return kExitSuccess;
}

// --- mtd -------------------------------------------------------------------

json sim_result_to_json(const entrokit::mtd::SimResult& r) {
    json doc{{"attack_success_rate", r.attack_success_rate},
             {"latency_overhead_pct", r.latency_overhead_pct},
             {"throughput_reduction_pct", r.throughput_reduction_pct},
             {"config_entropy_bits", r.config_entropy_bits},
             {"trials", r.trials},
             {"seed", r.seed}};
    doc["mean_time_to_compromise_s"] =
        r.mean_time_to_compromise_s ? json(*r.mean_time_to_compromise_s)
                                    : json(nullptr);
    return doc;
}

int cmd_mtd_run(const GlobalOptions& opts, const std::string& scenario_path,
                std::optional<std::uint64_t> trials,
                std::optional<std::uint64_t> seed) {
    auto scenario = entrokit::mtd::parse_scenario(read_text_file(scenario_path));
    if (trials) scenario.trials = *trials;
    if (seed) scenario.seed = *seed;
    const auto result = entrokit::mtd::run_simulation(
        scenario.strategy, scenario.attacker, scenario.duration_s,
        scenario.trials, scenario.seed);
    if (opts.format == "json") {
        emit(opts, sim_result_to_json(result).dump(2) + "\n");
    } else {
        std::string payload;
        payload += "attack_success_rate:      " +
                   fixed(result.attack_success_rate, 4) + "\n";
        payload += "mean_time_to_compromise:  " +
                   (result.mean_time_to_compromise_s
                        ? fixed(*result.mean_time_to_compromise_s, 2) + " s"
                        : std::string("unbounded")) +
                   "\n";
        payload += "latency_overhead:         " +
                   fixed(result.latency_overhead_pct, 2) + " %\n";
        payload += "throughput_reduction:     " +
                   fixed(result.throughput_reduction_pct, 2) + " %\n";
        payload += "config_entropy:           " +
                   fixed(result.config_entropy_bits, 2) + " bits\n";
        payload += "trials:                   " +
                   std::to_string(result.trials) + "\n";
        emit(opts, payload);
    }
    return kExitSuccess;
}

int cmd_mtd_sweep(const GlobalOptions& opts, const std::string& scenario_path,
                  const std::vector<double>& periods,
                  std::optional<std::uint64_t> trials,
                  std::optional<std::uint64_t> seed) {
    auto scenario = entrokit::mtd::parse_scenario(read_text_file(scenario_path));
    const auto points = entrokit::mtd::frequency_sweep(
        scenario.strategy, scenario.attacker, periods,
        trials.value_or(scenario.trials), seed.value_or(scenario.seed));
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& p : points)
            rows.push_back({{"period_s", p.period_s},
                            {"success_rate", p.attack_success_rate},
                            {"stderr", p.std_error}});
        emit(opts, rows.dump(2) + "\n");
    } else {
        std::string payload = "period_s,success_rate,stderr\n";
        for (const auto& p : points)
            payload += fixed(p.period_s, 3) + "," +
                       fixed(p.attack_success_rate, 6) + "," +
                       fixed(p.std_error, 6) + "\n";
        emit(opts, payload);
    }
    return kExitSuccess;
}

int cmd_mtd_compare(const GlobalOptions& opts,
                    std::vector<std::string> names,
                    std::optional<std::uint64_t> trials,
                    std::optional<std::uint64_t> seed) {
    if (names.empty()) names = entrokit::mtd::preset_names();
    const auto rows = entrokit::mtd::compare_strategies(
        names, trials.value_or(0), seed.value_or(kDefaultSeed));
    if (opts.format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"name", r.name},
                           {"attack_success_rate", r.attack_success_rate},
                           {"static_success_rate", r.static_success_rate},
                           {"attack_reduction_pct", r.attack_reduction_pct},
                           {"latency_overhead_pct", r.latency_overhead_pct},
                           {"throughput_reduction_pct",
                            r.throughput_reduction_pct},
                           {"config_entropy_bits", r.config_entropy_bits}});
        emit(opts, out.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string payload =
            "name,attack_reduction_pct,latency_overhead_pct,"
            "throughput_reduction_pct,config_entropy_bits\n";
        for (const auto& r : rows)
            payload += r.name + "," + fixed(r.attack_reduction_pct, 2) + "," +
                       fixed(r.latency_overhead_pct, 2) + "," +
                       fixed(r.throughput_reduction_pct, 2) + "," +
                       fixed(r.config_entropy_bits, 2) + "\n";
        emit(opts, payload);
    } else {
        std::string payload =
            "strategy                           reduction  latency  "
            "throughput  entropy\n";
        for (const auto& r : rows) {
            char line[160];
            std::snprintf(line, sizeof(line),
                          "%-34s %7.2f%% %7.2f%% %9.2f%% %7.2f b\n",
                          r.name.c_str(), r.attack_reduction_pct,
                          r.latency_overhead_pct, r.throughput_reduction_pct,
                          r.config_entropy_bits);
            payload += line;
        }
        payload +=
            "(reduction is measured against each preset's static twin under "
            "the same attacker)\n";
        emit(opts, payload);
    }
    return kExitSuccess;
}

int cmd_mtd_preset(const GlobalOptions& opts, const std::string& name) {
    const auto presets = entrokit::mtd::preset(name);
    json out = json::array();
    for (const auto& p : presets) {
        entrokit::mtd::MtdScenario scenario;
        scenario.strategy = p.strategy;
        scenario.attacker = p.attacker;
        scenario.trials = p.trials;
        scenario.seed = kDefaultSeed;
        out.push_back({{"name", p.name},
                       {"scenario", json::parse(entrokit::mtd::scenario_to_json(
                            scenario))}});
    }
    emit(opts, out.dump(2) + "\n");
    return kExitSuccess;
}

// --- dga -------------------------------------------------------------------

int cmd_dga(const GlobalOptions& opts, std::vector<std::string> domains,
            const std::string& list_path, std::optional<double> threshold) {
    if (!list_path.empty()) {
        std::istringstream in(read_text_file(list_path));
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty() && line.front() != '#') domains.push_back(line);
        }
    }
    if (domains.empty())
        throw std::invalid_argument("no domains given (arguments or --file)");

    bool any_suspicious = false;
    json rows = json::array();
    std::string text_payload;
    std::string csv_payload =
        "domain,score_bits,threshold_bits,label,effective_label_length\n";
    for (const auto& domain : domains) {
        const auto verdict = entrokit::detect::evaluate_domain(domain,
                                                               threshold);
        const bool suspicious =
            verdict.label == entrokit::detect::DomainLabel::suspicious;
        any_suspicious = any_suspicious || suspicious;
        const std::string label = suspicious ? "suspicious" : "benign";
        rows.push_back({{"domain", verdict.domain},
                        {"score_bits", verdict.score_bits},
                        {"threshold_bits", verdict.threshold_bits},
                        {"label", label},
                        {"effective_label_length",
                         verdict.effective_label_length},
                        {"scored_label", verdict.scored_label}});
        csv_payload += domain + "," + fixed(verdict.score_bits, 4) + "," +
                       fixed(verdict.threshold_bits, 4) + "," + label + "," +
                       std::to_string(verdict.effective_label_length) + "\n";
        char line[256];
        std::snprintf(line, sizeof(line), "%-40s %8.4f bits  %s\n",
                      domain.c_str(), verdict.score_bits, label.c_str());
        text_payload += line;
    }
    if (opts.format == "json")
        emit(opts, rows.dump(2) + "\n");
    else if (opts.format == "csv")
        emit(opts, csv_payload);
    else
        emit(opts, text_payload);
    return any_suspicious ? kExitDetectorPositive : kExitSuccess;
}

// --- scan ------------------------------------------------------------------

int cmd_scan(const GlobalOptions& opts, const std::string& root,
             double threshold, std::uint64_t min_size,
             const std::string& snapshot_out, const std::string& compare_path,
             double delta_threshold, double alert_fraction) {
    entrokit::detect::ScanPolicy policy;
    policy.threshold_bits_per_byte = threshold;
    policy.min_size_bytes = min_size;

    std::vector<entrokit::detect::FileEntropyFinding> findings;
    try {
        findings = entrokit::detect::scan_path(root, policy);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(e.what());
    }
    const std::string jsonl = entrokit::detect::findings_to_jsonl(findings);

    if (!snapshot_out.empty()) {
        std::ofstream out(snapshot_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + snapshot_out);
        out << jsonl;
    }

    if (!compare_path.empty()) {
        const auto before = entrokit::detect::findings_from_jsonl(
            read_text_file(compare_path));
        const auto delta = entrokit::detect::compare_snapshots(
            before, findings, delta_threshold, alert_fraction);
        if (opts.format == "json") {
            json doc{{"compared_files", delta.compared_files},
                     {"flagged_files", delta.flagged_files},
                     {"new_high_entropy", delta.new_high_entropy},
                     {"removed_files", delta.removed_files},
                     {"flagged_fraction", delta.flagged_fraction},
                     {"alert", delta.alert},
                     {"flagged_paths", delta.flagged_paths}};
            emit(opts, doc.dump(2) + "\n");
        } else {
            std::string payload;
            payload += "compared:  " + std::to_string(delta.compared_files) +
                       "\n";
            payload += "flagged:   " + std::to_string(delta.flagged_files) +
                       " (" + fixed(100.0 * delta.flagged_fraction, 1) +
                       "%)\n";
            payload += "new high-entropy: " +
                       std::to_string(delta.new_high_entropy) + "\n";
            payload += "removed:   " + std::to_string(delta.removed_files) +
                       "\n";
            payload += std::string("alert:     ") +
                       (delta.alert ? "RAISED" : "none") + "\n";
            emit(opts, payload);
        }
        return delta.alert ? kExitDetectorPositive : kExitSuccess;
    }

    bool any_high = false;
    for (const auto& f : findings)
        any_high =
            any_high || f.label == entrokit::detect::FileLabel::high_entropy;
    if (opts.format == "text") {
        std::string payload;
        for (const auto& f : findings) {
            char line[512];
            std::snprintf(line, sizeof(line), "%-12s %7.4f  %10llu  %s\n",
                          entrokit::detect::to_string(f.label).c_str(),
                          f.entropy_bits_per_byte,
                          static_cast<unsigned long long>(f.size_bytes),
                          f.path.c_str());
            payload += line;
        }
        emit(opts, payload);
    } else {
        // json and csv both use the JSON-lines report format
        emit(opts, jsonl);
    }
    return any_high ? kExitDetectorPositive : kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-injection analysis toolkit"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "PRNG seed for randomized commands")
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "write payload to file");

    // entropy
    auto* entropy_cmd =
        app.add_subcommand("entropy", "Shannon entropy of a file's bytes");
    entropy_cmd->fallthrough();
    std::string entropy_path;
    entropy_cmd->add_option("file", entropy_path, "input file")->required();

    // rngtest
    auto* rngtest_cmd = app.add_subcommand(
        "rngtest", "statistical test battery for the generator family");
    rngtest_cmd->fallthrough();
    std::string rng_kind = "emn_high";
    bool rng_all = false;
    bool rng_wall_clock = false;
    std::size_t rng_bytes = 65536;
    std::string rng_raw_out;
    rngtest_cmd->add_option("--kind", rng_kind,
                            "generator: weak_baseline|emn_low|emn_high|"
                            "physical_only")
        ->capture_default_str();
    rngtest_cmd->add_flag("--all", rng_all, "test all four generators");
    rngtest_cmd->add_option("--bytes", rng_bytes, "sample size in bytes")
        ->capture_default_str();
    rngtest_cmd->add_option("--raw-out", rng_raw_out,
                            "export the raw sample to a binary file");
    rngtest_cmd->add_flag("--wall-clock", rng_wall_clock,
                          "time factors from wall clock instead of the "
                          "simulated cost model");

    // aslr
    auto* aslr_cmd = app.add_subcommand("aslr", "brute-force cost model");
    aslr_cmd->require_subcommand(1);
    aslr_cmd->fallthrough();
    std::string aslr_model_name = "without_replacement";
    aslr_cmd->add_option("--model", aslr_model_name,
                         "without_replacement|with_replacement")
        ->capture_default_str();
    auto* aslr_table = aslr_cmd->add_subcommand(
        "table", "per-OS entropy bits for stack/heap/libraries");
    aslr_table->fallthrough();
    int aslr_bits = 0;
    auto* aslr_estimate = aslr_cmd->add_subcommand(
        "estimate", "analytic expected attempts for an entropy level");
    aslr_estimate->fallthrough();
    aslr_estimate->add_option("bits", aslr_bits, "entropy bits")->required();
    int curve_min = 0, curve_max = 0;
    auto* aslr_curve =
        aslr_cmd->add_subcommand("curve", "expected-attempt series (CSV)");
    aslr_curve->fallthrough();
    aslr_curve->add_option("min", curve_min, "minimum bits")->required();
    aslr_curve->add_option("max", curve_max, "maximum bits")->required();
    int sim_bits = 0;
    std::uint64_t sim_trials = 10000;
    auto* aslr_sim = aslr_cmd->add_subcommand(
        "simulate", "Monte Carlo attempt count (bits <= 24)");
    aslr_sim->fallthrough();
    aslr_sim->add_option("bits", sim_bits, "entropy bits")->required();
    aslr_sim->add_option("trials", sim_trials, "number of trials")->required();

    // mtd
    auto* mtd_cmd =
        app.add_subcommand("mtd", "moving target defense simulator");
    mtd_cmd->require_subcommand(1);
    mtd_cmd->fallthrough();
    std::optional<std::uint64_t> mtd_trials;
    std::optional<std::uint64_t> mtd_seed;
    mtd_cmd->add_option("--trials", mtd_trials, "override trial count");
    mtd_cmd->add_option("--sim-seed", mtd_seed,
                        "override the scenario's simulation seed");
    std::string mtd_scenario_path;
    auto* mtd_run =
        mtd_cmd->add_subcommand("run", "simulate a scenario file");
    mtd_run->fallthrough();
    mtd_run->add_option("scenario", mtd_scenario_path, "scenario JSON file")
        ->required();
    std::string sweep_scenario_path;
    std::vector<double> sweep_periods;
    auto* mtd_sweep = mtd_cmd->add_subcommand(
        "sweep", "success rate across reconfiguration periods");
    mtd_sweep->fallthrough();
    mtd_sweep->add_option("scenario", sweep_scenario_path, "scenario JSON file")
        ->required();
    mtd_sweep->add_option("--periods", sweep_periods,
                          "reconfiguration periods in seconds")
        ->required()
        ->delimiter(',');
    std::vector<std::string> compare_names;
    auto* mtd_compare = mtd_cmd->add_subcommand(
        "compare", "preset comparison against static twins");
    mtd_compare->fallthrough();
    mtd_compare->add_option("presets", compare_names,
                            "preset names (default: all)");
    std::string preset_name;
    auto* mtd_preset =
        mtd_cmd->add_subcommand("preset", "dump a shipped preset scenario");
    mtd_preset->fallthrough();
    mtd_preset->add_option("name", preset_name, "preset name")->required();

    // dga
    auto* dga_cmd = app.add_subcommand(
        "dga", "domain generation algorithm detector");
    dga_cmd->fallthrough();
    std::vector<std::string> dga_domains;
    std::string dga_file;
    std::optional<double> dga_threshold;
    dga_cmd->add_option("domains", dga_domains, "domains to score");
    dga_cmd->add_option("--file", dga_file, "newline-delimited domain list");
    dga_cmd->add_option("--threshold", dga_threshold,
                        "override the calibrated threshold (bits)");

    // scan
    auto* scan_cmd =
        app.add_subcommand("scan", "file entropy scanner / snapshot compare");
    scan_cmd->fallthrough();
    std::string scan_root;
    double scan_threshold = 7.2;
    std::uint64_t scan_min_size = 1024;
    std::string scan_snapshot_out;
    std::string scan_compare;
    double scan_delta = 1.5;
    double scan_alert_fraction = 0.2;
    scan_cmd->add_option("root", scan_root, "directory or file to scan")
        ->required();
    scan_cmd->add_option("--threshold", scan_threshold,
                         "high-entropy threshold, bits/byte")
        ->capture_default_str();
    scan_cmd->add_option("--min-size", scan_min_size,
                         "minimum file size in bytes")
        ->capture_default_str();
    scan_cmd->add_option("--snapshot-out", scan_snapshot_out,
                         "write the JSON-lines snapshot here");
    scan_cmd->add_option("--compare-against", scan_compare,
                         "earlier snapshot to diff against");
    scan_cmd->add_option("--delta-threshold", scan_delta,
                         "entropy increase that flags a file, bits/byte")
        ->capture_default_str();
    scan_cmd->add_option("--alert-fraction", scan_alert_fraction,
                         "flagged fraction that raises the alert")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*entropy_cmd) return cmd_entropy(opts, entropy_path);
        if (*rngtest_cmd)
            return cmd_rngtest(opts, rng_kind, rng_all, rng_bytes, rng_raw_out,
                               rng_wall_clock);
        if (*aslr_cmd) {
            const auto model =
                entrokit::aslr::guess_model_from_string(aslr_model_name);
            if (*aslr_table) return cmd_aslr_table(opts);
            if (*aslr_estimate) return cmd_aslr_estimate(opts, aslr_bits, model);
            if (*aslr_curve)
                return cmd_aslr_curve(opts, curve_min, curve_max, model);
            if (*aslr_sim)
                return cmd_aslr_simulate(opts, sim_bits, sim_trials, model);
        }
        if (*mtd_cmd) {
            if (*mtd_run)
                return cmd_mtd_run(opts, mtd_scenario_path, mtd_trials,
                                   mtd_seed);
            if (*mtd_sweep)
                return cmd_mtd_sweep(opts, sweep_scenario_path, sweep_periods,
                                     mtd_trials, mtd_seed);
            if (*mtd_compare)
                return cmd_mtd_compare(opts, compare_names, mtd_trials,
                                       mtd_seed);
            if (*mtd_preset) return cmd_mtd_preset(opts, preset_name);
        }
        if (*dga_cmd) return cmd_dga(opts, dga_domains, dga_file, dga_threshold);
        if (*scan_cmd)
            return cmd_scan(opts, scan_root, scan_threshold, scan_min_size,
                            scan_snapshot_out, scan_compare, scan_delta,
                            scan_alert_fraction);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
