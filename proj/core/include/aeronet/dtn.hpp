#pragma once

#include <optional>
#include <vector>

#include "aeronet/topology.hpp"

namespace aeronet {

// The ordered topologies {G_1 .. G_l} of one period with their durations.
struct TopologySequence {
    struct Entry {
        Snapshot snapshot;
        double duration = 0.0;
    };
    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }
    double period_total() const;

    // Consecutive identical snapshots are merged, zero durations dropped.
    static TopologySequence from_intervals(int node_count,
                                           const std::vector<LinkInterval>& link_intervals);
};

TopologySequence build_topology_sequence(const Scenario& scenario, double tr);

// Connectivity of the union graph over all topologies; equivalent to every
// ordered pair having a finite-delay temporal path.
bool superimposed_connected(const TopologySequence& ts);

// Worst-case temporal-path delay (l-1) * sum(T_i) for a connected
// superimposed graph.
double d_max(const TopologySequence& ts);

// True iff, starting at the beginning of topology `start_index`, every
// ordered pair (u, v) has a temporal path with delay <= D. A hop inside a
// topology completes at that topology's start boundary; delay is only the
// waiting time across boundaries.
bool connected_with_delay(const TopologySequence& ts, double delay, std::size_t start_index);

// Conjunction over all topology start indices; covers arbitrary start times.
bool connected_with_delay_all_starts(const TopologySequence& ts, double delay);

struct CtrdResult {
    double ctr_d = 0.0;
    double err = 0.0;
    double delay = 0.0;
    bool all_starts = false;
    // evaluated just below the answer: which start indices fail and one
    // unreached pair at the first failing start
    struct Binding {
        std::vector<std::size_t> failing_starts;
        int from = -1;
        int to = -1;
    };
    std::optional<Binding> certificate;
};

// Smallest tr (within err) whose topology sequence is connected with delay D
// from t_0 (or from all starts). Throws InfeasibleError when even tr_max
// fails.
CtrdResult compute_ctr_d(const Scenario& scenario, double delay, double err, bool all_starts);

}  // namespace aeronet
