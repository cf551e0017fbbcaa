#include "aeronet/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "aeronet/errors.hpp"
#include "aeronet/search.hpp"

namespace aeronet {

namespace {

std::vector<std::vector<int>> adjacency(const Snapshot& s) {
    std::vector<std::vector<int>> adj(s.node_count);
    for (const auto& [i, j] : s.active_links) {
        if (i < 0 || j < 0 || i >= s.node_count || j >= s.node_count || i == j)
            throw std::invalid_argument("snapshot link references an invalid node");
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

}  // namespace

std::vector<int> connected_components(const Snapshot& s) {
    const auto adj = adjacency(s);
    std::vector<int> comp(s.node_count, -1);
    std::vector<int> stack;
    int next = 0;
    for (int start = 0; start < s.node_count; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (comp[v] < 0) {
                    comp[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Snapshot& s) {
    if (s.node_count < 1) throw std::invalid_argument("snapshot needs at least one node");
    if (s.node_count == 1) return true;
    const auto comp = connected_components(s);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<bool> articulation_points(const Snapshot& s) {
    const auto adj = adjacency(s);
    const int n = s.node_count;
    std::vector<bool> cut(n, false);
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;

    // iterative Tarjan
    struct Frame { int u; int parent; std::size_t next; };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.u].size()) {
                const int v = adj[f.u][f.next++];
                if (v == f.parent) continue;
                if (disc[v] >= 0) {
                    low[f.u] = std::min(low[f.u], disc[v]);
                } else {
                    disc[v] = low[v] = timer++;
                    if (f.u == root) ++root_children;
                    stack.push_back({v, f.u, 0});
                }
            } else {
                const int u = f.u;
                const int p = f.parent;
                stack.pop_back();
                if (p >= 0) {
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) cut[p] = true;
                }
            }
        }
        if (root_children > 1) cut[root] = true;
    }
    return cut;
}

bool always_connected(const Scenario& scenario, double tr) {
    if (tr < 0.0) throw std::invalid_argument("transmission range must be >= 0");
    const EventTimeline timeline = build_link_timeline(scenario, tr);
    for (const LinkInterval& iv : intervals(timeline)) {
        if (!is_connected({scenario.node_count(), iv.active_links})) return false;
    }
    return true;
}

std::optional<ConnectivityGap> first_connectivity_gap(const Scenario& scenario, double tr) {
    const EventTimeline timeline = build_link_timeline(scenario, tr);
    const int n = scenario.node_count();
    for (const LinkInterval& iv : intervals(timeline)) {
        const Snapshot snap{n, iv.active_links};
        if (is_connected(snap)) continue;
        const auto comp = connected_components(snap);
        const double t_mid = 0.5 * (iv.t_begin + iv.t_end);
        ConnectivityGap gap{iv.t_begin, iv.t_end, -1, -1,
                            std::numeric_limits<double>::infinity()};
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (comp[i] == comp[j]) continue;
                const double d = pairwise_distance(scenario.trajectories[i],
                                                   scenario.trajectories[j], t_mid);
                if (d < gap.distance) {
                    gap.distance = d;
                    gap.node_i = i;
                    gap.node_j = j;
                }
            }
        }
        return gap;
    }
    return std::nullopt;
}

CtrResult compute_ctr(const Scenario& scenario, double err) {
    if (!(err > 0.0)) throw std::invalid_argument("err must be > 0");
    const double tr_max = scenario.tr_max();
    if (!always_connected(scenario, tr_max)) {
        std::ostringstream msg;
        msg << "network is not always connected even at tr_max = " << tr_max;
        if (auto gap = first_connectivity_gap(scenario, tr_max)) {
            msg << "; disconnected during [" << gap->t_begin << ", " << gap->t_end
                << "], closest split pair (" << gap->node_i << ", " << gap->node_j << ")";
        }
        throw InfeasibleError(msg.str());
    }

    CtrResult result;
    result.err = err;
    result.ctr = min_feasible(tr_max, err,
                              [&](double tr) { return always_connected(scenario, tr); });
    if (result.ctr > 0.0) {
        result.certificate =
            first_connectivity_gap(scenario, std::max(0.0, result.ctr - err));
    }
    return result;
}

}  // namespace aeronet
