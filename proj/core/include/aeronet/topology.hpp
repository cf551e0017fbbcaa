#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aeronet/timeline.hpp"

namespace aeronet {

// One instantaneous topology: E(t) = {(i,j) : s_ij(t) <= Tr}.
struct Snapshot {
    int node_count = 0;
    std::vector<std::pair<int, int>> active_links;  // unordered pairs, i < j
};

bool is_connected(const Snapshot& s);

// Connected components as node -> component id, ids dense from 0.
std::vector<int> connected_components(const Snapshot& s);

// Nodes whose removal disconnects the snapshot (articulation points).
std::vector<bool> articulation_points(const Snapshot& s);

// True iff every constant-link interval of the scenario at range tr is
// connected.
bool always_connected(const Scenario& scenario, double tr);

// Where a range fails: the first disconnected interval and the shortest
// missing link (closest pair spanning two components at the interval
// midpoint).
struct ConnectivityGap {
    double t_begin = 0.0;
    double t_end = 0.0;
    int node_i = 0;
    int node_j = 0;
    double distance = 0.0;
};

std::optional<ConnectivityGap> first_connectivity_gap(const Scenario& scenario, double tr);

// Fault-free critical transmission range: the smallest tr (within err) with
// always_connected true, found by binary search over [0, tr_max]. Throws
// InfeasibleError when even tr_max disconnects.
struct CtrResult {
    double ctr = 0.0;
    double err = 0.0;
    // binding constraint just below the answer (absent when ctr == 0)
    std::optional<ConnectivityGap> certificate;
};

CtrResult compute_ctr(const Scenario& scenario, double err);

}  // namespace aeronet
