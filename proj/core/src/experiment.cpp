#include "aeronet/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "aeronet/dtn.hpp"
#include "aeronet/errors.hpp"
#include "aeronet/fault.hpp"
#include "aeronet/topology.hpp"

namespace aeronet {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

ExperimentPlan::Sweep parse_sweep(const std::string& name) {
    if (name == "node_count") return ExperimentPlan::Sweep::NodeCount;
    if (name == "region_radius") return ExperimentPlan::Sweep::RegionRadius;
    if (name == "delay") return ExperimentPlan::Sweep::Delay;
    fail("sweep", "expected node_count, region_radius or delay");
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t value_index, int trial) {
    // splitmix-style mixing keeps trials decorrelated and reproducible
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (value_index * 1024 + trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    int count = 0;
    int infeasible = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++count;
    }
    double mean() const { return count ? sum / count : 0.0; }
    double stddev() const {
        if (count == 0) return 0.0;
        const double m = mean();
        return std::sqrt(std::max(0.0, sum_sq / count - m * m));
    }
};

}  // namespace

ExperimentPlan ExperimentPlan::parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("$", "expected a JSON object");

    ExperimentPlan plan;
    if (!doc.contains("sweep") || !doc["sweep"].is_string())
        fail("sweep", "expected a string");
    plan.sweep = parse_sweep(doc["sweep"].get<std::string>());

    if (!doc.contains("values") || !doc["values"].is_array() || doc["values"].empty())
        fail("values", "expected a non-empty array of numbers");
    for (const auto& v : doc["values"]) {
        if (!v.is_number()) fail("values", "expected numbers");
        plan.values.push_back(v.get<double>());
    }

    plan.trials_per_value = doc.value("trials_per_value", 1);
    if (plan.trials_per_value < 1) fail("trials_per_value", "must be >= 1");
    plan.rng_seed = doc.value("rng_seed", std::uint64_t{1});

    if (doc.contains("metrics")) {
        plan.metrics.clear();
        for (const auto& m : doc["metrics"]) {
            const std::string name = m.get<std::string>();
            if (name != "ctr" && name != "ctrf" && name != "ctrd")
                fail("metrics", "expected ctr, ctrf or ctrd");
            plan.metrics.push_back(name);
        }
        if (plan.metrics.empty()) fail("metrics", "expected at least one metric");
    }

    if (doc.contains("base")) {
        const json& base = doc["base"];
        plan.node_count = base.value("node_count", plan.node_count);
        plan.orbit_radius = base.value("orbit_radius", plan.orbit_radius);
        plan.region_radius = base.value("region_radius", plan.region_radius);
        plan.delay_periods = base.value("delay_periods", plan.delay_periods);
        plan.err = base.value("err", plan.err);
        plan.all_starts = base.value("all_starts", plan.all_starts);
        if (base.contains("area")) {
            plan.area.width = base["area"].value("w", plan.area.width);
            plan.area.height = base["area"].value("h", plan.area.height);
        }
        if (base.contains("omega")) {
            const json& w = base["omega"];
            if (w.is_number()) {
                plan.omega = AngularRate::inexact(w.get<double>());
            } else {
                plan.omega = AngularRate::rational(w.value("num", std::int64_t{0}),
                                                   w.value("den", std::int64_t{1}),
                                                   w.value("pi_factor", false));
            }
        }
        if (plan.err <= 0.0) fail("base.err", "must be > 0");
        if (plan.node_count < 1) fail("base.node_count", "must be >= 1");
    }
    return plan;
}

ResultTable run_experiment(const ExperimentPlan& plan) {
    ResultTable table;
    for (std::size_t vi = 0; vi < plan.values.size(); ++vi) {
        const double value = plan.values[vi];
        int n = plan.node_count;
        double region_radius = plan.region_radius;
        double delay_periods = plan.delay_periods;
        switch (plan.sweep) {
            case ExperimentPlan::Sweep::NodeCount: n = static_cast<int>(value); break;
            case ExperimentPlan::Sweep::RegionRadius: region_radius = value; break;
            case ExperimentPlan::Sweep::Delay: delay_periods = value; break;
        }

        std::map<std::string, Accumulator> acc;
        for (int trial = 0; trial < plan.trials_per_value; ++trial) {
            const Scenario scenario = generate_random_scenario(
                n, plan.orbit_radius, plan.omega, plan.area,
                trial_seed(plan.rng_seed, vi, trial));
            const double period = scenario.horizon.periodic ? scenario.horizon.period_length
                                                            : scenario.horizon.span();
            for (const std::string& metric : plan.metrics) {
                try {
                    if (metric == "ctr") {
                        acc[metric].add(compute_ctr(scenario, plan.err).ctr);
                    } else if (metric == "ctrf") {
                        acc[metric].add(
                            compute_ctr_f(scenario, region_radius, plan.err).ctr_f);
                    } else {
                        acc[metric].add(compute_ctr_d(scenario, delay_periods * period,
                                                      plan.err, plan.all_starts).ctr_d);
                    }
                } catch (const InfeasibleError&) {
                    ++acc[metric].infeasible;
                }
            }
        }

        for (const std::string& metric : plan.metrics) {
            const Accumulator& a = acc[metric];
            table.rows.push_back(
                {value, metric, a.mean(), a.stddev(), a.count, a.infeasible});
        }
    }
    return table;
}

std::string ResultTable::to_csv() const {
    std::string out = "value,metric,mean,stddev,trials,infeasible\n";
    char line[160];
    for (const ResultRow& r : rows) {
        std::snprintf(line, sizeof(line), "%.6f,%s,%.6f,%.6f,%d,%d\n", r.sweep_value,
                      r.metric.c_str(), r.mean, r.stddev, r.trials, r.infeasible);
        out += line;
    }
    return out;
}

std::string ResultTable::to_json() const {
    json rows_json = json::array();
    for (const ResultRow& r : rows) {
        rows_json.push_back({{"value", r.sweep_value},
                             {"metric", r.metric},
                             {"mean", r.mean},
                             {"stddev", r.stddev},
                             {"trials", r.trials},
                             {"infeasible", r.infeasible}});
    }
    return rows_json.dump(2);
}

}  // namespace aeronet
