#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aeronet/scenario.hpp"

namespace aeronet {

// Seeded Monte-Carlo sweep over one parameter, averaging CTR/CTR_f/CTR_D over
// random fleets.
struct ExperimentPlan {
    enum class Sweep { NodeCount, RegionRadius, Delay };

    Sweep sweep = Sweep::NodeCount;
    std::vector<double> values;
    int trials_per_value = 1;

    // base parameters (the swept one is overridden per value)
    int node_count = 10;
    double orbit_radius = 10.0;
    AngularRate omega = AngularRate::rational(20);
    Rect area{1000.0, 1000.0};
    double region_radius = 20.0;
    double delay_periods = 0.5;  // delay expressed in horizon periods
    double err = 0.01;
    bool all_starts = true;
    std::vector<std::string> metrics{"ctr"};  // subset of {ctr, ctrf, ctrd}

    std::uint64_t rng_seed = 1;

    static ExperimentPlan parse(const std::string& json_text);
};

struct ResultRow {
    double sweep_value = 0.0;
    std::string metric;
    double mean = 0.0;
    double stddev = 0.0;  // population stddev over feasible trials
    int trials = 0;       // feasible trials included in the mean
    int infeasible = 0;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    // columns: value,metric,mean,stddev,trials,infeasible
    std::string to_csv() const;
    std::string to_json() const;
};

// Deterministic for a fixed plan: trial seeds are derived from
// (rng_seed, value index, trial index) and one scenario is shared by all
// requested metrics of a trial. Infeasible trials are excluded from the mean
// and counted.
ResultTable run_experiment(const ExperimentPlan& plan);

}  // namespace aeronet
