// Independent reference implementations used to check the library. Everything
// here recomputes results from node positions (or exhaustive enumeration)
// rather than reusing the closed-form / event-driven production paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "aeronet/dtn.hpp"
#include "aeronet/fault.hpp"
#include "aeronet/kinematics.hpp"
#include "aeronet/scenario.hpp"
#include "aeronet/topology.hpp"

namespace oracles {

// distance by direct coordinate evaluation (projection of each position onto
// the axes, subtract, square)
inline double coordinate_distance_squared(const aeronet::Trajectory& a,
                                          const aeronet::Trajectory& b, double t) {
    const aeronet::Vec2 pa = a.position(t);
    const aeronet::Vec2 pb = b.position(t);
    return (pa.x - pb.x) * (pa.x - pb.x) + (pa.y - pb.y) * (pa.y - pb.y);
}

inline double bisect_level(const std::function<double(double)>& f, double lo, double hi,
                           double eps = 1e-10) {
    const bool rising = f(lo) < 0.0;
    while (hi - lo > eps) {
        const double mid = 0.5 * (lo + hi);
        const bool below = f(mid) < 0.0;
        if (below == rising) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// dense-sampling + bisection level crossings of one pair's distance
inline std::vector<aeronet::Crossing> sampled_crossings(const aeronet::Trajectory& a,
                                                        const aeronet::Trajectory& b,
                                                        double level,
                                                        const aeronet::AnalysisHorizon& horizon,
                                                        long samples) {
    const double span = horizon.periodic ? horizon.period_length : horizon.span();
    const double t0 = horizon.t_start;
    const auto f = [&](double t) { return coordinate_distance_squared(a, b, t) - level * level; };
    std::vector<aeronet::Crossing> out;
    double prev = f(t0);
    for (long k = 1; k <= samples; ++k) {
        const double t = t0 + span * static_cast<double>(k) / static_cast<double>(samples);
        const double cur = f(t);
        if ((prev < 0.0) != (cur < 0.0)) {
            const double root = bisect_level(f, t - span / samples, t);
            out.push_back({root, cur > 0.0 ? aeronet::CrossingDirection::Rising
                                           : aeronet::CrossingDirection::Falling});
        }
        prev = cur;
    }
    return out;
}

struct LinkEvent {
    double time;
    int i, j;
    bool up;
};

// all link transitions of a scenario at range tr found by dense sampling
inline std::vector<LinkEvent> sampled_link_events(const aeronet::Scenario& scenario, double tr,
                                                  long samples) {
    const auto& horizon = scenario.horizon;
    const double span = horizon.periodic ? horizon.period_length : horizon.span();
    const double t0 = horizon.t_start;
    const int n = scenario.node_count();

    std::vector<aeronet::Vec2> pos(n);
    std::vector<char> state(n * n, 0);
    auto refresh = [&](double t) {
        for (int v = 0; v < n; ++v) pos[v] = scenario.trajectories[v].position(t);
    };
    refresh(t0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            state[i * n + j] = aeronet::norm_squared(pos[i] - pos[j]) <= tr * tr;
    }

    std::vector<LinkEvent> out;
    const double dt = span / static_cast<double>(samples);
    for (long k = 1; k <= samples; ++k) {
        const double t = t0 + span * static_cast<double>(k) / static_cast<double>(samples);
        refresh(t);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const bool now = aeronet::norm_squared(pos[i] - pos[j]) <= tr * tr;
                if (now == static_cast<bool>(state[i * n + j])) continue;
                const auto f = [&](double tt) {
                    return coordinate_distance_squared(scenario.trajectories[i],
                                                       scenario.trajectories[j], tt) -
                           tr * tr;
                };
                out.push_back({bisect_level(f, t - dt, t), i, j, now});
                state[i * n + j] = now;
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const LinkEvent& a, const LinkEvent& b) { return a.time < b.time; });
    return out;
}

inline bool union_find_connected(int n, const std::vector<std::pair<int, int>>& links) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (const auto& [a, b] : links) {
        const int ra = find(a), rb = find(b);
        if (ra != rb) { parent[ra] = rb; --comps; }
    }
    return comps <= 1;
}

// smallest tr connecting the snapshot at time t: bottleneck of the
// maximum-spanning-tree complement, via Prim on distances
inline double bottleneck_range(const aeronet::Scenario& scenario, double t) {
    const int n = scenario.node_count();
    if (n <= 1) return 0.0;
    std::vector<aeronet::Vec2> pos(n);
    for (int v = 0; v < n; ++v) pos[v] = scenario.trajectories[v].position(t);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<bool> used(n, false);
    best[0] = 0.0;
    double bottleneck = 0.0;
    for (int it = 0; it < n; ++it) {
        int u = -1;
        for (int v = 0; v < n; ++v) {
            if (!used[v] && (u < 0 || best[v] < best[u])) u = v;
        }
        used[u] = true;
        bottleneck = std::max(bottleneck, best[u]);
        for (int v = 0; v < n; ++v) {
            if (!used[v]) best[v] = std::min(best[v], aeronet::norm(pos[u] - pos[v]));
        }
    }
    return bottleneck;
}

// grid-scan CTR: the first feasible value on a tr grid, where feasibility is
// dense-time-sampled snapshot connectivity (equivalently tr >= the max
// bottleneck range over the samples)
inline double grid_scan_ctr(const aeronet::Scenario& scenario, double grid_step,
                            long time_samples) {
    const auto& horizon = scenario.horizon;
    const double span = horizon.periodic ? horizon.period_length : horizon.span();
    double needed = 0.0;
    for (long k = 0; k < time_samples; ++k) {
        const double t =
            horizon.t_start + span * static_cast<double>(k) / static_cast<double>(time_samples);
        needed = std::max(needed, bottleneck_range(scenario, t));
    }
    double tr = 0.0;
    while (tr < needed) tr += grid_step;
    return tr;
}

// exhaustive region-based connectivity: try every subset of covered nodes
inline int rbc_bruteforce(const aeronet::Snapshot& s, const std::vector<int>& covered) {
    const int n = s.node_count;
    if (!union_find_connected(n, s.active_links)) return 0;
    int best = aeronet::kUnboundedConnectivity;
    const int m = static_cast<int>(covered.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<bool> removed(n, false);
        int removed_count = 0;
        for (int b = 0; b < m; ++b) {
            if (mask & (1 << b)) { removed[covered[b]] = true; ++removed_count; }
        }
        if (removed_count >= best) continue;
        // survivors connected? (<= 1 survivor counts as connected)
        std::vector<int> survivors;
        for (int v = 0; v < n; ++v) {
            if (!removed[v]) survivors.push_back(v);
        }
        if (survivors.size() <= 1) continue;
        std::vector<int> remap(n, -1);
        for (std::size_t idx = 0; idx < survivors.size(); ++idx) remap[survivors[idx]] = static_cast<int>(idx);
        std::vector<std::pair<int, int>> links;
        for (const auto& [a, b] : s.active_links) {
            if (!removed[a] && !removed[b]) links.emplace_back(remap[a], remap[b]);
        }
        if (!union_find_connected(static_cast<int>(survivors.size()), links))
            best = removed_count;
    }
    return best;
}

// breadth-first search over the time-expanded graph (node x topology layer)
inline bool time_expanded_connected(const aeronet::TopologySequence& ts, double delay,
                                    std::size_t start_index) {
    const std::size_t l = ts.size();
    const int n = ts.entries.front().snapshot.node_count;
    const double eps = 1e-12 * std::max(1.0, ts.period_total());

    // topology layers whose start lies within [0, delay]
    std::vector<std::size_t> layer_topology;
    double offset = 0.0;
    for (std::size_t step = 0; offset <= delay + eps; ++step) {
        const std::size_t idx = (start_index + step) % l;
        layer_topology.push_back(idx);
        offset += ts.entries[idx].duration;
        if (layer_topology.size() > l * l + l) break;  // beyond d_max, no new reachability
    }
    const std::size_t layers = layer_topology.size();

    std::vector<std::vector<int>> comps(layers);
    for (std::size_t s = 0; s < layers; ++s)
        comps[s] = aeronet::connected_components(ts.entries[layer_topology[s]].snapshot);

    for (int src = 0; src < n; ++src) {
        std::vector<char> seen(layers * n, 0);
        std::queue<std::pair<int, std::size_t>> q;
        seen[src] = 1;
        q.push({src, 0});
        std::vector<char> reached(n, 0);
        reached[src] = 1;
        while (!q.empty()) {
            const auto [v, s] = q.front();
            q.pop();
            reached[v] = 1;
            for (int w = 0; w < n; ++w) {
                if (comps[s][w] == comps[s][v] && !seen[s * n + w]) {
                    seen[s * n + w] = 1;
                    q.push({w, s});
                }
            }
            if (s + 1 < layers && !seen[(s + 1) * n + v]) {
                seen[(s + 1) * n + v] = 1;
                q.push({v, s + 1});
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!reached[v]) return false;
        }
    }
    return true;
}

}  // namespace oracles
