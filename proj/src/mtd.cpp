#include "entrokit/mtd.hpp"

#include "entrokit/data_dir.hpp"
#include "entrokit/randomness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace entrokit::mtd {
namespace {

using nlohmann::json;

constexpr double kBaselineLatencyMs = 100.0;
// Disruption cost per active dimension, percent per reconfiguration/second.
constexpr double kDisruptionPctPerHz = 0.5;

class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed, std::uint64_t trial) {
        state_ = seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
        // decorrelate nearby trial indices
        rng::splitmix64(state_);
        rng::splitmix64(state_);
    }

    std::uint64_t next() { return rng::splitmix64(state_); }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Reconfiguration event stream walked forward in time.
class EventSchedule {
public:
    EventSchedule(const MtdStrategy& strategy, TrialRng& rng)
        : period_(strategy.reconfig_period_s),
          poisson_(strategy.schedule == Schedule::poisson),
          rng_(rng) {
        if (std::isinf(period_)) {
            next_ = std::numeric_limits<double>::infinity();
        } else if (poisson_) {
            next_ = exponential_gap();
        } else {
            next_ = rng_.uniform01() * period_;  // uniform phase per trial
        }
    }

    // Consumes every event at or before t.
    void advance_to(double t) {
        while (next_ <= t) {
            last_ = next_;
            next_ += poisson_ ? exponential_gap() : period_;
        }
    }

    double last_event() const { return last_; }
    double next_event() const { return next_; }

private:
    double exponential_gap() {
        double u;
        do {
            u = rng_.uniform01();
        } while (u <= 0.0);
        return -period_ * std::log(u);
    }

    double period_;
    bool poisson_;
    TrialRng& rng_;
    double last_ = -std::numeric_limits<double>::infinity();
    double next_;
};

struct TrialOutcome {
    bool success = false;
    double time_to_compromise_s = 0.0;
};

TrialOutcome simulate_trial(const MtdStrategy& strategy,
                            const AttackerModel& attacker, double campaign_s,
                            TrialRng& rng) {
    const auto& dims = strategy.dimensions;
    EventSchedule schedule(strategy, rng);

    std::vector<double> learned_at(
        dims.size(), -std::numeric_limits<double>::infinity());
    double t = 0.0;

    while (t < campaign_s) {
        schedule.advance_to(t);

        // Relearn the first dimension invalidated by a reconfiguration.
        bool learned_something = false;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (learned_at[i] > schedule.last_event()) continue;
            // Scan position of the current value is uniform over the
            // dimension's configuration space.
            const std::uint64_t position = 1 + rng.next() % dims[i].cardinality;
            const double duration =
                dims[i].recon_cost_s * static_cast<double>(position) /
                static_cast<double>(dims[i].cardinality);
            t += duration;
            schedule.advance_to(t);
            learned_at[i] = t;
            learned_something = true;
            break;
        }
        if (learned_something) continue;

        // Full fresh picture: attempt the exploit.
        const double finish = t + attacker.exploit_window_s;
        if (finish > campaign_s) return {};
        if (schedule.next_event() > finish) return {true, finish};
        // Interrupted inside the window (boundary ties favor the defender).
        t = schedule.next_event() + attacker.restart_penalty_s;
    }
    return {};
}

void check_finite_positive(double value, const char* field) {
    if (!(value > 0.0) || std::isinf(value))
        throw std::invalid_argument(std::string(field) +
                                    " must be finite and > 0");
}

json dimension_to_json(const MtdDimension& d) {
    return json{{"name", d.name},
                {"cardinality", d.cardinality},
                {"recon_cost_s", d.recon_cost_s},
                {"change_latency_ms", d.change_latency_ms},
                {"change_throughput_frac", d.change_throughput_frac}};
}

void reject_unknown_keys(const json& obj, const std::string& context,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key))
            throw std::invalid_argument("unknown key '" + key + "' in " +
                                        context);
    }
}

MtdDimension parse_dimension(const json& obj, const std::string& context) {
    if (!obj.is_object())
        throw std::invalid_argument(context + " must be an object");
    reject_unknown_keys(obj, context,
                        {"name", "cardinality", "recon_cost_s",
                         "change_latency_ms", "change_throughput_frac"});
    MtdDimension d;
    d.name = obj.at("name").get<std::string>();
    d.cardinality = obj.at("cardinality").get<std::uint64_t>();
    d.recon_cost_s = obj.at("recon_cost_s").get<double>();
    if (obj.contains("change_latency_ms"))
        d.change_latency_ms = obj.at("change_latency_ms").get<double>();
    if (obj.contains("change_throughput_frac"))
        d.change_throughput_frac =
            obj.at("change_throughput_frac").get<double>();
    return d;
}

AttackerModel parse_attacker(const json& obj) {
    if (!obj.is_object())
        throw std::invalid_argument("attacker must be an object");
    reject_unknown_keys(obj, "attacker",
                        {"exploit_window_s", "max_campaign_s",
                         "restart_penalty_s"});
    AttackerModel a;
    a.exploit_window_s = obj.at("exploit_window_s").get<double>();
    a.max_campaign_s = obj.at("max_campaign_s").get<double>();
    if (obj.contains("restart_penalty_s"))
        a.restart_penalty_s = obj.at("restart_penalty_s").get<double>();
    a.validate();
    return a;
}

double parse_period(const json& value) {
    if (value.is_null()) return std::numeric_limits<double>::infinity();
    if (value.is_string()) {
        const auto s = value.get<std::string>();
        if (s == "inf" || s == "infinity" || s == "static")
            return std::numeric_limits<double>::infinity();
        throw std::invalid_argument(
            "reconfig_period_s must be a positive number or \"inf\"");
    }
    return value.get<double>();
}

MtdStrategy parse_strategy_fields(const json& obj,
                                  const std::string& context) {
    MtdStrategy strategy;
    if (!obj.contains("dimensions") || !obj.at("dimensions").is_array() ||
        obj.at("dimensions").empty())
        throw std::invalid_argument(context +
                                    ".dimensions must be a non-empty array");
    std::size_t index = 0;
    for (const auto& d : obj.at("dimensions")) {
        strategy.dimensions.push_back(parse_dimension(
            d, context + ".dimensions[" + std::to_string(index) + "]"));
        ++index;
    }
    strategy.reconfig_period_s = parse_period(obj.at("reconfig_period_s"));
    if (obj.contains("schedule")) {
        const auto s = obj.at("schedule").get<std::string>();
        if (s == "periodic")
            strategy.schedule = Schedule::periodic;
        else if (s == "poisson")
            strategy.schedule = Schedule::poisson;
        else
            throw std::invalid_argument(
                "schedule must be \"periodic\" or \"poisson\"");
    }
    strategy.validate();
    return strategy;
}

Preset parse_preset(const std::string& name, const json& obj) {
    reject_unknown_keys(obj, "preset " + name,
                        {"dimensions", "reconfig_period_s", "schedule",
                         "attacker", "trials"});
    Preset p;
    p.name = name;
    p.strategy = parse_strategy_fields(obj, "preset " + name);
    p.attacker = parse_attacker(obj.at("attacker"));
    if (obj.contains("trials")) p.trials = obj.at("trials").get<std::uint64_t>();
    return p;
}

const json& presets_doc() {
    static const json doc = json::parse(read_data_file("mtd_presets.json"));
    return doc;
}

}  // namespace

void MtdStrategy::validate() const {
    if (dimensions.empty())
        throw std::invalid_argument("strategy needs at least one dimension");
    std::set<std::string> names;
    for (const auto& d : dimensions) {
        if (d.cardinality < 2)
            throw std::invalid_argument("dimension '" + d.name +
                                        "': cardinality must be >= 2");
        check_finite_positive(d.recon_cost_s, "recon_cost_s");
        if (d.change_latency_ms < 0.0)
            throw std::invalid_argument("change_latency_ms must be >= 0");
        if (!(d.change_throughput_frac >= 0.0 &&
              d.change_throughput_frac < 1.0))
            throw std::invalid_argument(
                "change_throughput_frac must be in [0, 1)");
        if (!names.insert(d.name).second)
            throw std::invalid_argument("duplicate dimension name: " + d.name);
    }
    if (!(reconfig_period_s > 0.0))
        throw std::invalid_argument("reconfig_period_s must be > 0");
}

void AttackerModel::validate() const {
    check_finite_positive(exploit_window_s, "exploit_window_s");
    check_finite_positive(max_campaign_s, "max_campaign_s");
    if (restart_penalty_s < 0.0)
        throw std::invalid_argument("restart_penalty_s must be >= 0");
}

double config_entropy(const MtdStrategy& strategy) {
    double bits = 0.0;
    for (const auto& d : strategy.dimensions)
        bits += std::log2(static_cast<double>(d.cardinality));
    return bits;
}

double latency_overhead_pct(const MtdStrategy& strategy) {
    if (strategy.is_static()) return 0.0;
    double latency_ms = 0.0;
    for (const auto& d : strategy.dimensions) latency_ms += d.change_latency_ms;
    const double frequency = 1.0 / strategy.reconfig_period_s;
    return 100.0 * latency_ms / kBaselineLatencyMs +
           kDisruptionPctPerHz * frequency *
               static_cast<double>(strategy.dimensions.size());
}

double throughput_reduction_pct(const MtdStrategy& strategy) {
    if (strategy.is_static()) return 0.0;
    double kept = 1.0;
    for (const auto& d : strategy.dimensions)
        kept *= 1.0 - d.change_throughput_frac;
    return 100.0 * (1.0 - kept);
}

SimResult run_simulation(const MtdStrategy& strategy,
                         const AttackerModel& attacker, double duration_s,
                         std::uint64_t trials, std::uint64_t seed) {
    strategy.validate();
    attacker.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const double campaign_s = std::min(attacker.max_campaign_s, duration_s);

    std::uint64_t successes = 0;
    double time_sum = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        TrialRng rng(seed, trial);
        const TrialOutcome outcome =
            simulate_trial(strategy, attacker, campaign_s, rng);
        if (outcome.success) {
            ++successes;
            time_sum += outcome.time_to_compromise_s;
        }
    }

    SimResult result;
    result.attack_success_rate =
        static_cast<double>(successes) / static_cast<double>(trials);
    if (successes > 0)
        result.mean_time_to_compromise_s =
            time_sum / static_cast<double>(successes);
    result.latency_overhead_pct = latency_overhead_pct(strategy);
    result.throughput_reduction_pct = throughput_reduction_pct(strategy);
    result.config_entropy_bits = config_entropy(strategy);
    result.trials = trials;
    result.seed = seed;
    return result;
}

std::vector<SweepPoint> frequency_sweep(const MtdStrategy& strategy,
                                        const AttackerModel& attacker,
                                        const std::vector<double>& periods,
                                        std::uint64_t trials,
                                        std::uint64_t seed) {
    if (periods.empty())
        throw std::invalid_argument("periods must be non-empty");
    std::vector<SweepPoint> points;
    for (double period : periods) {
        if (!(period > 0.0))
            throw std::invalid_argument("periods must be positive");
        MtdStrategy s = strategy;
        s.reconfig_period_s = period;
        const SimResult r = run_simulation(s, attacker, attacker.max_campaign_s,
                                           trials, seed);
        const double p = r.attack_success_rate;
        const double n = static_cast<double>(trials);
        points.push_back({period, p, std::sqrt(p * (1.0 - p) / n)});
    }
    return points;
}

std::vector<std::string> preset_names() {
    return {"ip_hopping", "port_randomization", "protocol_diversification",
            "multi_dimensional", "cpmtd_power"};
}

std::vector<Preset> preset(const std::string& name) {
    const json& doc = presets_doc();
    if (!doc.contains(name))
        throw std::invalid_argument("unknown preset: " + name);
    const json& entry = doc.at(name);
    std::vector<Preset> presets;
    if (entry.contains("sub_scenarios")) {
        reject_unknown_keys(entry, "preset " + name, {"sub_scenarios"});
        for (const auto& [tag, sub] : entry.at("sub_scenarios").items())
            presets.push_back(parse_preset(name + "/" + tag, sub));
    } else {
        presets.push_back(parse_preset(name, entry));
    }
    return presets;
}

std::vector<ComparisonRow> compare_strategies(
    const std::vector<std::string>& names, std::uint64_t trials,
    std::uint64_t seed) {
    if (names.empty())
        throw std::invalid_argument("need at least one preset name");
    std::vector<ComparisonRow> rows;
    for (const auto& name : names) {
        for (const auto& p : preset(name)) {
            const std::uint64_t n = trials > 0 ? trials : p.trials;
            const SimResult moving = run_simulation(
                p.strategy, p.attacker, p.attacker.max_campaign_s, n, seed);
            MtdStrategy static_twin = p.strategy;
            static_twin.reconfig_period_s =
                std::numeric_limits<double>::infinity();
            const SimResult fixed = run_simulation(
                static_twin, p.attacker, p.attacker.max_campaign_s, n, seed);

            ComparisonRow row;
            row.name = p.name;
            row.attack_success_rate = moving.attack_success_rate;
            row.static_success_rate = fixed.attack_success_rate;
            row.attack_reduction_pct =
                fixed.attack_success_rate > 0.0
                    ? 100.0 *
                          (fixed.attack_success_rate -
                           moving.attack_success_rate) /
                          fixed.attack_success_rate
                    : 0.0;
            row.latency_overhead_pct = moving.latency_overhead_pct;
            row.throughput_reduction_pct = moving.throughput_reduction_pct;
            row.config_entropy_bits = moving.config_entropy_bits;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

MtdScenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid scenario JSON: ") +
                                    e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("scenario must be a JSON object");
    reject_unknown_keys(doc, "scenario",
                        {"dimensions", "reconfig_period_s", "schedule",
                         "attacker", "duration_s", "trials", "seed"});
    MtdScenario scenario;
    try {
        scenario.strategy = parse_strategy_fields(doc, "scenario");
        scenario.attacker = parse_attacker(doc.at("attacker"));
        if (doc.contains("duration_s"))
            scenario.duration_s = doc.at("duration_s").get<double>();
        if (doc.contains("trials"))
            scenario.trials = doc.at("trials").get<std::uint64_t>();
        if (doc.contains("seed"))
            scenario.seed = doc.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid scenario: ") +
                                    e.what());
    }
    if (!(scenario.duration_s > 0.0))
        throw std::invalid_argument("duration_s must be > 0");
    if (scenario.trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    return scenario;
}

std::string scenario_to_json(const MtdScenario& scenario) {
    json doc;
    doc["dimensions"] = json::array();
    for (const auto& d : scenario.strategy.dimensions)
        doc["dimensions"].push_back(dimension_to_json(d));
    if (scenario.strategy.is_static())
        doc["reconfig_period_s"] = "inf";
    else
        doc["reconfig_period_s"] = scenario.strategy.reconfig_period_s;
    doc["schedule"] = scenario.strategy.schedule == Schedule::poisson
                          ? "poisson"
                          : "periodic";
    doc["attacker"] = {
        {"exploit_window_s", scenario.attacker.exploit_window_s},
        {"max_campaign_s", scenario.attacker.max_campaign_s},
        {"restart_penalty_s", scenario.attacker.restart_penalty_s}};
    if (!std::isinf(scenario.duration_s)) doc["duration_s"] = scenario.duration_s;
    doc["trials"] = scenario.trials;
    doc["seed"] = scenario.seed;
    return doc.dump(2);
}

}  // namespace entrokit::mtd
