#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aeronet/kinematics.hpp"

namespace aeronet {

struct Rect {
    double width = 0.0;
    double height = 0.0;

    double diagonal() const { return std::hypot(width, height); }
};

// One analyzable fleet: trajectories, deployment area and analysis horizon.
struct Scenario {
    std::vector<Trajectory> trajectories;
    Rect deployment_area;
    AnalysisHorizon horizon;
    std::vector<std::string> labels;  // optional, parallel to trajectories

    int node_count() const { return static_cast<int>(trajectories.size()); }
    // upper end of every transmission-range search
    double tr_max() const { return deployment_area.diagonal(); }
};

// JSON scenario document <-> Scenario. parse validates all invariants and
// throws ParseError with the offending field path. If the document omits the
// horizon, one period from common_period is used.
Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& scenario);

// n non-intersecting circular orbits with uniform random centers and phases,
// all at the given rate. Deterministic for a fixed seed. Throws PackingError
// when rejection sampling cannot place an orbit.
Scenario generate_random_scenario(int n, double orbit_radius, AngularRate omega,
                                  Rect area, std::uint64_t seed);

}  // namespace aeronet
