#include "aeronet/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace aeronet {
namespace {

constexpr double kPi = 3.14159265358979323846;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

struct Fraction {
    std::int64_t num = 0;  // carries the sign
    std::int64_t den = 1;  // > 0

    static Fraction reduced(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("angular rate with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        return {n, d};
    }
};

// gcd of two non-negative reduced fractions: gcd(a/b, c/d) = gcd(ad, cb)/(bd)
Fraction fraction_gcd(Fraction a, Fraction b) {
    if (a.num == 0) return b;
    if (b.num == 0) return a;
    const __int128 ad = static_cast<__int128>(a.num) * b.den;
    const __int128 cb = static_cast<__int128>(b.num) * a.den;
    const auto gcd128 = [](__int128 x, __int128 y) {
        if (x < 0) x = -x;
        if (y < 0) y = -y;
        while (y != 0) { const __int128 r = x % y; x = y; y = r; }
        return x;
    };
    const __int128 g = gcd128(ad, cb);
    const __int128 bd = static_cast<__int128>(a.den) * b.den;
    const __int128 gg = gcd128(g, bd);
    return {static_cast<std::int64_t>(g / gg), static_cast<std::int64_t>(bd / gg)};
}

// Refine a sign-change bracket [lo, hi] down to eps by bisection.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              int sign_lo, double eps) {
    while (hi - lo > eps) {
        const double mid = 0.5 * (lo + hi);
        const int sm = sign_of(f(mid));
        if (sm == 0 || sm == sign_lo) lo = mid; else hi = mid;
        if (sm == 0) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

AngularRate AngularRate::rational(std::int64_t num, std::int64_t den, bool pi_factor) {
    const Fraction f = Fraction::reduced(num, den);
    AngularRate r;
    r.num = f.num;
    r.den = f.den;
    r.pi_factor = pi_factor;
    r.exact = true;
    return r;
}

AngularRate AngularRate::inexact(double radians_per_hour) {
    AngularRate r;
    r.exact = false;
    r.inexact_value = radians_per_hour;
    return r;
}

double AngularRate::radians_per_hour() const {
    if (!exact) return inexact_value;
    const double v = static_cast<double>(num) / static_cast<double>(den);
    return pi_factor ? v * kPi : v;
}

bool AngularRate::is_zero() const { return exact ? num == 0 : inexact_value == 0.0; }

Vec2 OrbitSpec::position(double t) const {
    const double angle = phase() + angular_velocity.radians_per_hour() * t;
    return {center.x + orbit_radius * std::cos(angle),
            center.y + orbit_radius * std::sin(angle)};
}

bool OrbitSpec::valid() const {
    if (orbit_radius < 0.0) return false;
    return std::abs(norm(initial_position - center) - orbit_radius) <= kEpsGeom;
}

Vec2 Trajectory::position(double t) const {
    if (circular()) return orbit().position(t);
    const auto& s = sampled();
    if (!s.position) throw std::domain_error("sampled trajectory has no position function");
    return s.position(t);
}

double pairwise_distance_squared(const Trajectory& a, const Trajectory& b, double t) {
    if (!(a.circular() && b.circular())) {
        const Vec2 d = a.position(t) - b.position(t);
        return norm_squared(d);
    }
    // closed-form cosine sum over the polar decomposition of both orbits
    const OrbitSpec& oi = a.orbit();
    const OrbitSpec& oj = b.orbit();
    const double rci = oi.center_range(), rcj = oj.center_range();
    const double aci = oi.center_angle(), acj = oj.center_angle();
    const double bi = oi.phase(), bj = oj.phase();
    const double ri = oi.orbit_radius, rj = oj.orbit_radius;
    const double wi = oi.angular_velocity.radians_per_hour();
    const double wj = oj.angular_velocity.radians_per_hour();

    return rci * rci + ri * ri + 2.0 * rci * ri * std::cos(bi - aci + wi * t)
         + rcj * rcj + rj * rj + 2.0 * rcj * rj * std::cos(bj - acj + wj * t)
         - 2.0 * (rci * rcj * std::cos(aci - acj)
                + ri * rj * std::cos(bi - bj + (wi - wj) * t)
                + rci * rj * std::cos(aci - bj - wj * t)
                + rcj * ri * std::cos(acj - bi - wi * t));
}

std::vector<Crossing> find_zero_crossings(const std::function<double(double)>& f,
                                          double t0, double t1, double step,
                                          double eps_time) {
    std::vector<Crossing> out;
    if (!(t1 > t0) || !(step > 0.0)) return out;

    const auto steps = static_cast<std::size_t>(std::ceil((t1 - t0) / step));
    double prev_t = t0;
    int prev_sign = sign_of(f(t0));
    for (std::size_t k = 1; k <= steps; ++k) {
        const double t = std::min(t0 + static_cast<double>(k) * step, t1);
        const int s = sign_of(f(t));
        if (s != 0 && prev_sign != 0 && s != prev_sign) {
            const double root = bisect(f, prev_t, t, prev_sign, eps_time);
            out.push_back({root, s > 0 ? CrossingDirection::Rising
                                       : CrossingDirection::Falling});
        }
        if (s != 0) { prev_sign = s; prev_t = t; }
        // sign == 0 at a grid point: keep the previous bracket end so a real
        // crossing is still caught against the next nonzero sample; an exact
        // tangential touch produces no sign change and is dropped
    }
    return out;
}

namespace {

// Equal-rate equal-radius pair: s^2(t) = C + A cos(wt) + B sin(wt), solved
// analytically. Returns at most two crossings per 2pi/w period.
std::vector<Crossing> closed_form_crossings(const OrbitSpec& oi, const OrbitSpec& oj,
                                            double level, const AnalysisHorizon& horizon) {
    std::vector<Crossing> out;
    const double w = oi.angular_velocity.radians_per_hour();
    if (w == 0.0) return out;

    const double r = oi.orbit_radius;
    const Vec2 dc = oi.center - oj.center;
    const double bi = oi.phase(), bj = oj.phase();
    const double C = norm_squared(dc) + 2.0 * r * r * (1.0 - std::cos(bi - bj));
    const double A = 2.0 * r * (dc.x * (std::cos(bi) - std::cos(bj))
                              + dc.y * (std::sin(bi) - std::sin(bj)));
    const double B = 2.0 * r * (-dc.x * (std::sin(bi) - std::sin(bj))
                               + dc.y * (std::cos(bi) - std::cos(bj)));
    const double M = std::hypot(A, B);
    if (M < 1e-15) return out;  // constant distance

    const double u = (level * level - C) / M;
    if (std::abs(u) >= 1.0 - 1e-12) return out;  // no crossing, or tangency

    // s^2 = C + M sin(wt + phi)
    const double phi = std::atan2(A, B);
    const double theta1 = std::asin(u);        // cos > 0 branch
    const double theta2 = kPi - theta1;        // cos < 0 branch
    const double t0 = horizon.t_start, t1 = horizon.t_end;

    for (const double theta : {theta1, theta2}) {
        // d(s^2)/dt = M w cos(wt + phi)
        const bool rising = (std::cos(theta) * w) > 0.0;
        const double base = (theta - phi) / w;
        const double stride = 2.0 * kPi / std::abs(w);
        auto k0 = static_cast<long long>(std::floor((t0 - base) / stride)) - 1;
        for (long long k = k0;; ++k) {
            const double t = base + static_cast<double>(k) * stride;
            if (t >= t1) break;
            if (t > t0 + kEpsTime) {
                out.push_back({t, rising ? CrossingDirection::Rising
                                         : CrossingDirection::Falling});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Crossing& a, const Crossing& b) { return a.time < b.time; });
    return out;
}

}  // namespace

std::vector<Crossing> threshold_crossings(const Trajectory& a, const Trajectory& b,
                                          double level, const AnalysisHorizon& horizon) {
    if (level < 0.0) throw std::invalid_argument("threshold level must be >= 0");
    if (!horizon.valid()) throw std::invalid_argument("invalid analysis horizon");

    if (a.circular() && b.circular()) {
        const OrbitSpec& oi = a.orbit();
        const OrbitSpec& oj = b.orbit();
        const double wi = oi.angular_velocity.radians_per_hour();
        const double wj = oj.angular_velocity.radians_per_hour();
        if (wi == wj && oi.orbit_radius == oj.orbit_radius) {
            return closed_form_crossings(oi, oj, level, horizon);
        }
        // bounded-frequency signal: resolve the fastest sinusoid present
        const double wmax = std::max({std::abs(wi), std::abs(wj), std::abs(wi - wj)});
        double step = horizon.span() / 4096.0;
        if (wmax > 0.0) step = std::min(step, kPi / (32.0 * wmax));
        const auto f = [&](double t) {
            return pairwise_distance_squared(a, b, t) - level * level;
        };
        return find_zero_crossings(f, horizon.t_start, horizon.t_end, step);
    }

    double step = horizon.span() / 4096.0;
    if (!a.circular() && a.sampled().sample_step > 0.0)
        step = std::min(step, a.sampled().sample_step);
    if (!b.circular() && b.sampled().sample_step > 0.0)
        step = std::min(step, b.sampled().sample_step);
    const auto f = [&](double t) {
        return pairwise_distance_squared(a, b, t) - level * level;
    };
    return find_zero_crossings(f, horizon.t_start, horizon.t_end, step);
}

std::optional<double> common_period(std::span<const Trajectory> trajectories) {
    bool any_pi = false, any_plain = false;
    Fraction g{0, 1};
    for (const Trajectory& traj : trajectories) {
        if (!traj.circular())
            throw std::invalid_argument(
                "common_period requires circular trajectories; supply an explicit horizon");
        const AngularRate& w = traj.orbit().angular_velocity;
        if (w.is_zero()) continue;  // stationary node is periodic with any period
        if (!w.exact) return std::nullopt;
        (w.pi_factor ? any_pi : any_plain) = true;
        g = fraction_gcd(g, Fraction::reduced(w.num < 0 ? -w.num : w.num, w.den));
    }
    if (any_pi && any_plain) return std::nullopt;  // ratio carries a stray pi
    if (g.num == 0) return std::nullopt;           // no moving node
    const double ratio = static_cast<double>(g.den) / static_cast<double>(g.num);
    return any_pi ? 2.0 * ratio : 2.0 * kPi * ratio;
}

}  // namespace aeronet
