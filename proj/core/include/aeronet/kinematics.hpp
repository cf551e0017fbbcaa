#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "aeronet/geometry.hpp"

namespace aeronet {

inline constexpr double kEpsGeom = 1e-6;   // miles
inline constexpr double kEpsLevel = 1e-6;  // miles
inline constexpr double kEpsTime = 1e-8;   // hours

// Signed angular velocity in radians per hour. Exact rates are kept as
// num/den (optionally scaled by pi) so commensurability is decidable; rates
// built from a plain double are flagged inexact and treated as
// incommensurate with everything.
struct AngularRate {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool pi_factor = false;
    bool exact = true;
    double inexact_value = 0.0;

    static AngularRate rational(std::int64_t num, std::int64_t den = 1, bool pi_factor = false);
    static AngularRate inexact(double radians_per_hour);

    double radians_per_hour() const;
    bool is_zero() const;
};

// Circular flight path: the geometric controlling parameters for one node.
struct OrbitSpec {
    Vec2 center;
    double orbit_radius = 0.0;
    Vec2 initial_position;
    AngularRate angular_velocity;

    // polar coordinates of the orbit center w.r.t. the global origin
    double center_range() const { return norm(center); }
    double center_angle() const { return std::atan2(center.y, center.x); }
    // initial phase angle of the node on its orbit (two-argument arctangent
    // of the center-relative projections)
    double phase() const {
        return std::atan2(initial_position.y - center.y, initial_position.x - center.x);
    }

    Vec2 position(double t) const;

    // |initial_position - center| must equal orbit_radius within kEpsGeom
    bool valid() const;
};

// Arbitrary predictable flight path given as a position function. The
// sampling step bounds the grid used when root-finding against it.
struct SampledPath {
    std::function<Vec2(double)> position;
    double sample_step = 0.0;
};

class Trajectory {
public:
    explicit Trajectory(OrbitSpec orbit) : path_(std::move(orbit)) {}
    explicit Trajectory(SampledPath path) : path_(std::move(path)) {}

    bool circular() const { return std::holds_alternative<OrbitSpec>(path_); }
    const OrbitSpec& orbit() const { return std::get<OrbitSpec>(path_); }
    const SampledPath& sampled() const { return std::get<SampledPath>(path_); }

    Vec2 position(double t) const;

private:
    std::variant<OrbitSpec, SampledPath> path_;
};

struct AnalysisHorizon {
    double t_start = 0.0;
    double t_end = 0.0;
    bool periodic = false;
    double period_length = 0.0;  // meaningful iff periodic

    double span() const { return t_end - t_start; }
    bool valid() const {
        if (!(t_end > t_start)) return false;
        if (periodic && !(period_length > 0.0 && span() >= period_length)) return false;
        return true;
    }
};

// Squared inter-node distance s^2(t). Circular pairs are evaluated through
// the cosine-sum closed form; sampled paths by coordinate subtraction.
double pairwise_distance_squared(const Trajectory& a, const Trajectory& b, double t);

inline double pairwise_distance(const Trajectory& a, const Trajectory& b, double t) {
    return std::sqrt(pairwise_distance_squared(a, b, t));
}

enum class CrossingDirection {
    Rising,   // s(t) increasing through the level: link dies
    Falling,  // s(t) decreasing through the level: link becomes active
};

struct Crossing {
    double time = 0.0;
    CrossingDirection direction = CrossingDirection::Rising;
};

// Times in [t_start, t_end) where s_ab(t) crosses `level`, sorted. Tangential
// touches (no sign change) are excluded. Pairs with equal angular velocity
// and equal orbit radius reduce to A cos(wt) + B sin(wt) and are solved in
// closed form; everything else is bracketed on a sampling grid and refined by
// bisection to kEpsTime.
std::vector<Crossing> threshold_crossings(const Trajectory& a, const Trajectory& b,
                                          double level, const AnalysisHorizon& horizon);

// Least common period of a set of circular trajectories, or nullopt when the
// rates are incommensurate (any inexact nonzero rate, or mixed pi scaling).
// All-stationary fleets have no distinguished period and also yield nullopt.
// Throws std::invalid_argument if a non-circular trajectory is present.
std::optional<double> common_period(std::span<const Trajectory> trajectories);

// Sign-change bracketing + bisection for f(t) = 0 over [t0, t1) with grid
// step `step`. Shared by link-threshold, existence and coverage root-finding.
std::vector<Crossing> find_zero_crossings(const std::function<double(double)>& f,
                                          double t0, double t1, double step,
                                          double eps_time = kEpsTime);

}  // namespace aeronet
