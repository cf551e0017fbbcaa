#include "aeronet/scenario.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "aeronet/errors.hpp"

namespace aeronet {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Vec2 require_point(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

AngularRate parse_rate(const json& j, const std::string& path) {
    if (j.is_number()) return AngularRate::inexact(j.get<double>());
    if (!j.is_object()) fail(path, "expected a number or {num, den, pi_factor}");
    if (!j.contains("num") || !j["num"].is_number_integer())
        fail(path + ".num", "expected an integer");
    const auto num = j["num"].get<std::int64_t>();
    std::int64_t den = 1;
    if (j.contains("den")) {
        if (!j["den"].is_number_integer() || j["den"].get<std::int64_t>() == 0)
            fail(path + ".den", "expected a nonzero integer");
        den = j["den"].get<std::int64_t>();
    }
    bool pi_factor = false;
    if (j.contains("pi_factor")) {
        if (!j["pi_factor"].is_boolean()) fail(path + ".pi_factor", "expected a boolean");
        pi_factor = j["pi_factor"].get<bool>();
    }
    return AngularRate::rational(num, den, pi_factor);
}

AnalysisHorizon derive_horizon(const Scenario& scenario) {
    const auto period = common_period(scenario.trajectories);
    if (!period)
        fail("horizon",
             "required: angular velocities are not commensurate (or the fleet is stationary), "
             "so no period can be derived");
    return {0.0, *period, true, *period};
}

// deterministic, platform-independent uniform doubles
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("$", "expected a JSON object");
    if (!doc.contains("area") || !doc["area"].is_object())
        fail("area", "expected {w, h}");
    Scenario scenario;
    scenario.deployment_area.width = require_number(doc["area"].value("w", json()), "area.w");
    scenario.deployment_area.height = require_number(doc["area"].value("h", json()), "area.h");
    if (!(scenario.deployment_area.width > 0.0) || !(scenario.deployment_area.height > 0.0))
        fail("area", "dimensions must be > 0");

    if (!doc.contains("anps") || !doc["anps"].is_array() || doc["anps"].empty())
        fail("anps", "expected a non-empty array");

    bool any_label = false;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < doc["anps"].size(); ++k) {
        const json& anp = doc["anps"][k];
        const std::string path = "anps[" + std::to_string(k) + "]";
        if (!anp.is_object()) fail(path, "expected an object");

        OrbitSpec orbit;
        orbit.center = require_point(anp.value("center", json()), path + ".center");
        orbit.orbit_radius = require_number(anp.value("orbit_radius", json()),
                                            path + ".orbit_radius");
        if (orbit.orbit_radius < 0.0) fail(path + ".orbit_radius", "must be >= 0");
        orbit.angular_velocity =
            parse_rate(anp.value("omega_rad_per_hour", json()), path + ".omega_rad_per_hour");

        const bool has_phase = anp.contains("phase_deg");
        const bool has_pos = anp.contains("initial_position");
        if (has_phase == has_pos)
            fail(path, "exactly one of phase_deg or initial_position is required");
        if (has_phase) {
            const double deg = require_number(anp["phase_deg"], path + ".phase_deg");
            const double rad = deg * kPi / 180.0;
            orbit.initial_position = {orbit.center.x + orbit.orbit_radius * std::cos(rad),
                                      orbit.center.y + orbit.orbit_radius * std::sin(rad)};
        } else {
            orbit.initial_position =
                require_point(anp["initial_position"], path + ".initial_position");
            if (!orbit.valid())
                fail(path + ".initial_position",
                     "not on the orbit circle (|p - c| differs from orbit_radius by more than "
                     "the geometric tolerance)");
        }

        labels.push_back(anp.value("label", std::string()));
        any_label = any_label || !labels.back().empty();
        scenario.trajectories.emplace_back(orbit);
    }
    if (any_label) scenario.labels = std::move(labels);

    if (doc.contains("horizon")) {
        const json& h = doc["horizon"];
        if (!h.is_object()) fail("horizon", "expected an object");
        scenario.horizon.t_start = require_number(h.value("t_start", json(0.0)), "horizon.t_start");
        scenario.horizon.t_end = require_number(h.value("t_end", json()), "horizon.t_end");
        scenario.horizon.periodic = h.value("periodic", false);
        if (scenario.horizon.periodic)
            scenario.horizon.period_length =
                require_number(h.value("period_length", json()), "horizon.period_length");
        if (!scenario.horizon.valid()) fail("horizon", "t_end must exceed t_start (and one full period must fit when periodic)");
    } else {
        scenario.horizon = derive_horizon(scenario);
    }
    return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
    json doc;
    doc["area"] = {{"w", scenario.deployment_area.width},
                   {"h", scenario.deployment_area.height}};
    doc["anps"] = json::array();
    for (int i = 0; i < scenario.node_count(); ++i) {
        const Trajectory& t = scenario.trajectories[i];
        if (!t.circular())
            throw std::invalid_argument("sampled trajectories have no file representation");
        const OrbitSpec& o = t.orbit();
        json anp;
        anp["center"] = {o.center.x, o.center.y};
        anp["orbit_radius"] = o.orbit_radius;
        anp["phase_deg"] = o.phase() * 180.0 / kPi;
        if (o.angular_velocity.exact) {
            anp["omega_rad_per_hour"] = {{"num", o.angular_velocity.num},
                                         {"den", o.angular_velocity.den},
                                         {"pi_factor", o.angular_velocity.pi_factor}};
        } else {
            anp["omega_rad_per_hour"] = o.angular_velocity.inexact_value;
        }
        if (!scenario.labels.empty() && !scenario.labels[i].empty())
            anp["label"] = scenario.labels[i];
        doc["anps"].push_back(std::move(anp));
    }
    doc["horizon"] = {{"t_start", scenario.horizon.t_start},
                      {"t_end", scenario.horizon.t_end},
                      {"periodic", scenario.horizon.periodic}};
    if (scenario.horizon.periodic)
        doc["horizon"]["period_length"] = scenario.horizon.period_length;
    return doc.dump(2);
}

Scenario generate_random_scenario(int n, double orbit_radius, AngularRate omega,
                                  Rect area, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    if (orbit_radius < 0.0) throw std::invalid_argument("orbit radius must be >= 0");
    if (2.0 * orbit_radius > area.width || 2.0 * orbit_radius > area.height)
        throw PackingError("orbit diameter exceeds the deployment area");

    Rng rng(seed);
    Scenario scenario;
    scenario.deployment_area = area;

    std::vector<Vec2> centers;
    constexpr int kMaxAttemptsPerNode = 10000;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttemptsPerNode && !placed; ++attempt) {
            const Vec2 c{rng.uniform(orbit_radius, area.width - orbit_radius),
                         rng.uniform(orbit_radius, area.height - orbit_radius)};
            placed = true;
            for (const Vec2& other : centers) {
                if (norm(c - other) <= 2.0 * orbit_radius) {
                    placed = false;
                    break;
                }
            }
            if (placed) centers.push_back(c);
        }
        if (!placed) {
            std::ostringstream msg;
            msg << "could not place orbit " << i << " of " << n << " (radius " << orbit_radius
                << ") in a " << area.width << " x " << area.height << " area after "
                << kMaxAttemptsPerNode << " attempts";
            throw PackingError(msg.str());
        }
    }

    for (const Vec2& c : centers) {
        const double phase = rng.uniform(0.0, 2.0 * kPi);
        OrbitSpec orbit;
        orbit.center = c;
        orbit.orbit_radius = orbit_radius;
        orbit.initial_position = {c.x + orbit_radius * std::cos(phase),
                                  c.y + orbit_radius * std::sin(phase)};
        orbit.angular_velocity = omega;
        scenario.trajectories.emplace_back(orbit);
    }

    if (const auto period = common_period(scenario.trajectories)) {
        scenario.horizon = {0.0, *period, true, *period};
    } else {
        const double w = std::abs(omega.radians_per_hour());
        scenario.horizon = {0.0, w > 0.0 ? 2.0 * kPi / w : 1.0, false, 0.0};
    }
    return scenario;
}

}  // namespace aeronet
