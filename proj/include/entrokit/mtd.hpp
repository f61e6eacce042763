// Seeded discrete-event simulation of attacker reconnaissance against a
// periodically reconfiguring defender.
//
// Attacker mechanics: dimensions are learned sequentially by scanning the
// dimension's configuration space at a fixed rate, so one learning pass
// takes recon_cost_s * k / cardinality seconds where k is the (uniform)
// scan position of the current value. A reconfiguration invalidates every
// dimension learned before it. Once all dimensions are fresh the exploit
// runs for exploit_window_s and succeeds iff no reconfiguration falls
// inside the window (boundary ties favor the defender). Failed attempts
// pay restart_penalty_s. Success must land within the campaign budget.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace entrokit::mtd {

struct MtdDimension {
    std::string name;
    std::uint64_t cardinality = 2;      // distinct configurations
    double recon_cost_s = 1.0;          // full scan time, seconds
    double change_latency_ms = 0.0;     // added latency while randomized
    double change_throughput_frac = 0.0;  // fractional throughput loss
};

enum class Schedule { periodic, poisson };

struct MtdStrategy {
    std::vector<MtdDimension> dimensions;
    /// Seconds between reconfigurations; infinity means static.
    double reconfig_period_s = std::numeric_limits<double>::infinity();
    Schedule schedule = Schedule::periodic;

    bool is_static() const {
        return !(reconfig_period_s <
                 std::numeric_limits<double>::infinity());
    }

    void validate() const;  // throws std::invalid_argument
};

struct AttackerModel {
    double exploit_window_s = 1.0;
    double max_campaign_s = 3600.0;
    double restart_penalty_s = 0.0;

    void validate() const;
};

struct SimResult {
    double attack_success_rate = 0.0;
    /// Mean over successful trials; empty when no trial succeeded.
    std::optional<double> mean_time_to_compromise_s;
    double latency_overhead_pct = 0.0;
    double throughput_reduction_pct = 0.0;
    double config_entropy_bits = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct SweepPoint {
    double period_s = 0.0;
    double attack_success_rate = 0.0;
    double std_error = 0.0;
};

struct MtdScenario {
    MtdStrategy strategy;
    AttackerModel attacker;
    double duration_s = std::numeric_limits<double>::infinity();
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
};

struct Preset {
    std::string name;  // preset name, or "preset/sub_scenario" for cpmtd
    MtdStrategy strategy;
    AttackerModel attacker;
    std::uint64_t trials = 10000;
};

struct ComparisonRow {
    std::string name;
    double attack_success_rate = 0.0;
    double static_success_rate = 0.0;
    double attack_reduction_pct = 0.0;  // vs the preset's static twin
    double latency_overhead_pct = 0.0;
    double throughput_reduction_pct = 0.0;
    double config_entropy_bits = 0.0;
};

/// Joint configuration entropy: sum of log2(cardinality) over dimensions.
double config_entropy(const MtdStrategy& strategy);

/// Deterministic overhead model. Static strategies report zero overhead;
/// randomized ones pay each dimension's latency plus a per-dimension
/// disruption term linear in reconfiguration frequency. Throughput loss
/// composes multiplicatively across dimensions.
double latency_overhead_pct(const MtdStrategy& strategy);
double throughput_reduction_pct(const MtdStrategy& strategy);

/// Monte Carlo attack simulation. Per-trial seeds derive from
/// (seed, trial_index); identical inputs give bit-identical results.
/// duration_s additionally caps the attacker's campaign.
SimResult run_simulation(const MtdStrategy& strategy,
                         const AttackerModel& attacker, double duration_s,
                         std::uint64_t trials, std::uint64_t seed);

/// One simulation per period, same per-trial seed discipline throughout.
std::vector<SweepPoint> frequency_sweep(const MtdStrategy& strategy,
                                        const AttackerModel& attacker,
                                        const std::vector<double>& periods,
                                        std::uint64_t trials,
                                        std::uint64_t seed);

/// Shipped calibration fixtures. Known names: ip_hopping,
/// port_randomization, protocol_diversification, multi_dimensional,
/// cpmtd_power. cpmtd_power expands to three tagged sub-scenarios.
/// Throws std::invalid_argument on unknown names.
std::vector<Preset> preset(const std::string& name);
std::vector<std::string> preset_names();

/// Attack reduction and overheads per preset, each against its static twin.
std::vector<ComparisonRow> compare_strategies(
    const std::vector<std::string>& names, std::uint64_t trials,
    std::uint64_t seed);

/// Strict scenario parser; unknown keys are rejected.
/// Throws std::invalid_argument with a field diagnostic on violation.
MtdScenario parse_scenario(const std::string& json_text);
std::string scenario_to_json(const MtdScenario& scenario);

}  // namespace entrokit::mtd
