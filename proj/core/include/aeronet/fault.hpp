#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "aeronet/topology.hpp"

namespace aeronet {

// A candidate fault center: either an intersection point of two vulnerability
// zones (disks of the region radius around a node pair) or a node's own
// position.
struct FaultPoint {
    enum class Kind { PairIntersection, NodeCenter };

    int id = 0;
    Kind kind = Kind::NodeCenter;
    int node_i = 0;
    int node_j = 0;   // PairIntersection only
    int branch = 1;   // PairIntersection only, 1 or 2
    double region_radius = 0.0;

    std::string describe() const;
};

// All I-points of a fleet: two branches per node pair plus one per node.
std::vector<FaultPoint> enumerate_fault_points(const Scenario& scenario, double region_radius);

struct ExistenceIntervals {
    int fault_point = 0;
    std::vector<std::pair<double, double>> intervals;  // disjoint, sorted
};

// Time spans where the fault point exists: s_ij(t) <= 2R for pair points, the
// whole horizon for node centers.
ExistenceIntervals existence_intervals(const FaultPoint& fp, const Scenario& scenario);

// Location of the fault point at time t. Branch 1 is the positive-cross side
// of pos_i -> pos_j (branch labels stay continuous within an existence
// interval). Throws std::domain_error outside existence.
Vec2 fault_point_location(const FaultPoint& fp, const Scenario& scenario, double t);

struct CoverageSubinterval {
    double t_begin = 0.0;
    double t_end = 0.0;
    std::vector<int> covered;  // sorted node ids
};

struct CoverageTimeline {
    int fault_point = 0;
    // one partition per existence interval
    std::vector<std::vector<CoverageSubinterval>> per_existence_interval;
};

// Partition of each existence interval into spans of constant covered-node
// set (node k covered iff its distance to the fault point is <= R).
CoverageTimeline coverage_timeline(const FaultPoint& fp, const Scenario& scenario);

inline constexpr int kUnboundedConnectivity = std::numeric_limits<int>::max();

// Size of the smallest subset of `covered` whose removal disconnects the
// surviving graph (>= 2 survivors in > 1 component), or
// kUnboundedConnectivity if no such subset exists. Survivor sets of size <= 1
// count as connected. Disconnected input yields 0. Computed as a
// region-restricted minimum vertex cut via node-splitting max-flow; `cutoff`
// truncates the answer (values >= cutoff are reported as cutoff).
int region_based_connectivity(const Snapshot& s, const std::vector<int>& covered,
                              int cutoff = kUnboundedConnectivity);

struct CtrfResult {
    double ctr_f = 0.0;
    double err = 0.0;
    double region_radius = 0.0;
    // binding constraint observed just below the answer
    struct Binding {
        std::string fault_point;
        double t_begin = 0.0;
        double t_end = 0.0;
        std::vector<int> covered;
    };
    std::optional<Binding> certificate;
};

// Smallest tr (within err) such that for every fault point and every static
// interval the failure of any subset of covered nodes leaves the survivors
// connected. Throws InfeasibleError with the witnessing fault point.
CtrfResult compute_ctr_f(const Scenario& scenario, double region_radius, double err);

}  // namespace aeronet
