#include "aeronet/fault.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "aeronet/errors.hpp"
#include "aeronet/search.hpp"

namespace aeronet {

namespace {

constexpr double kPi = 3.14159265358979323846;

AnalysisHorizon effective_horizon(const AnalysisHorizon& h) {
    if (!h.periodic) return h;
    AnalysisHorizon one = h;
    one.t_end = h.t_start + h.period_length;
    return one;
}

double node_rate(const Trajectory& t) {
    return t.circular() ? std::abs(t.orbit().angular_velocity.radians_per_hour()) : 0.0;
}

}  // namespace

std::string FaultPoint::describe() const {
    std::ostringstream os;
    if (kind == Kind::NodeCenter) {
        os << "I_" << node_i;
    } else {
        os << "I_(" << node_i << "," << node_j << ")^" << branch;
    }
    return os.str();
}

std::vector<FaultPoint> enumerate_fault_points(const Scenario& scenario, double region_radius) {
    if (!(region_radius > 0.0)) throw std::invalid_argument("region radius must be > 0");
    std::vector<FaultPoint> out;
    const int n = scenario.node_count();
    int id = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int branch : {1, 2}) {
                FaultPoint fp;
                fp.id = id++;
                fp.kind = FaultPoint::Kind::PairIntersection;
                fp.node_i = i;
                fp.node_j = j;
                fp.branch = branch;
                fp.region_radius = region_radius;
                out.push_back(fp);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        FaultPoint fp;
        fp.id = id++;
        fp.kind = FaultPoint::Kind::NodeCenter;
        fp.node_i = i;
        fp.region_radius = region_radius;
        out.push_back(fp);
    }
    return out;
}

ExistenceIntervals existence_intervals(const FaultPoint& fp, const Scenario& scenario) {
    const AnalysisHorizon horizon = effective_horizon(scenario.horizon);
    ExistenceIntervals out;
    out.fault_point = fp.id;
    if (fp.kind == FaultPoint::Kind::NodeCenter) {
        out.intervals.emplace_back(horizon.t_start, horizon.t_end);
        return out;
    }

    const Trajectory& a = scenario.trajectories[fp.node_i];
    const Trajectory& b = scenario.trajectories[fp.node_j];
    const double level = 2.0 * fp.region_radius;
    bool exists = pairwise_distance_squared(a, b, horizon.t_start) <= level * level;
    double open_at = horizon.t_start;
    for (const Crossing& c : threshold_crossings(a, b, level, horizon)) {
        if (c.direction == CrossingDirection::Falling) {
            if (!exists) { exists = true; open_at = c.time; }
        } else if (exists) {
            out.intervals.emplace_back(open_at, c.time);
            exists = false;
        }
    }
    if (exists) out.intervals.emplace_back(open_at, horizon.t_end);
    return out;
}

Vec2 fault_point_location(const FaultPoint& fp, const Scenario& scenario, double t) {
    if (fp.kind == FaultPoint::Kind::NodeCenter)
        return scenario.trajectories[fp.node_i].position(t);

    const Vec2 pi = scenario.trajectories[fp.node_i].position(t);
    const Vec2 pj = scenario.trajectories[fp.node_j].position(t);
    const auto hit = intersect_equal_circles(pi, pj, fp.region_radius);
    if (hit.count == 0) {
        // existence boundaries are located to finite precision; treat a
        // separation within kEpsGeom of tangency as the tangent point
        const double d = norm(pi - pj);
        if (d <= 2.0 * fp.region_radius + kEpsGeom) return 0.5 * (pi + pj);
        throw std::domain_error("fault point " + fp.describe() + " does not exist at this time");
    }
    return fp.branch == 1 ? hit.p[0] : hit.p[1];
}

CoverageTimeline coverage_timeline(const FaultPoint& fp, const Scenario& scenario) {
    const auto existence = existence_intervals(fp, scenario);
    const int n = scenario.node_count();
    const double R = fp.region_radius;

    CoverageTimeline out;
    out.fault_point = fp.id;
    out.per_existence_interval.reserve(existence.intervals.size());

    if (fp.kind == FaultPoint::Kind::NodeCenter) {
        for (const auto& [t0, t1] : existence.intervals) {
            out.per_existence_interval.push_back({{t0, t1, {fp.node_i}}});
        }
        return out;
    }

    for (const auto& [t0, t1] : existence.intervals) {
        // boundary times where some third node crosses the region border
        std::vector<double> cuts{t0, t1};
        for (int k = 0; k < n; ++k) {
            if (k == fp.node_i || k == fp.node_j) continue;
            const auto dist2 = [&](double t) {
                const Vec2 loc = fault_point_location(fp, scenario, t);
                const Vec2 pk = scenario.trajectories[k].position(t);
                return norm_squared(loc - pk) - R * R;
            };
            const double wmax = std::max({node_rate(scenario.trajectories[fp.node_i]),
                                          node_rate(scenario.trajectories[fp.node_j]),
                                          node_rate(scenario.trajectories[k])});
            double step = (t1 - t0) / 256.0;
            if (wmax > 0.0) step = std::min(step, kPi / (32.0 * wmax));
            if (!(step > 0.0)) step = t1 - t0;
            for (const Crossing& c : find_zero_crossings(dist2, t0, t1, step))
                cuts.push_back(c.time);
        }
        std::sort(cuts.begin(), cuts.end());

        std::vector<CoverageSubinterval> parts;
        for (std::size_t m = 0; m + 1 < cuts.size(); ++m) {
            const double lo = cuts[m], hi = cuts[m + 1];
            if (!(hi - lo > 2.0 * kEpsTime)) continue;
            const double mid = 0.5 * (lo + hi);
            std::vector<int> covered{fp.node_i, fp.node_j};
            const Vec2 loc = fault_point_location(fp, scenario, mid);
            for (int k = 0; k < n; ++k) {
                if (k == fp.node_i || k == fp.node_j) continue;
                if (norm_squared(loc - scenario.trajectories[k].position(mid)) <= R * R)
                    covered.push_back(k);
            }
            std::sort(covered.begin(), covered.end());
            if (!parts.empty() && parts.back().covered == covered) {
                parts.back().t_end = hi;
            } else {
                parts.push_back({lo, hi, std::move(covered)});
            }
        }
        if (parts.empty()) parts.push_back({t0, t1, {fp.node_i, fp.node_j}});
        parts.front().t_begin = t0;
        parts.back().t_end = t1;
        out.per_existence_interval.push_back(std::move(parts));
    }
    return out;
}

namespace {

// Unit-capacity node-splitting flow network. Node v becomes v_in (2v) and
// v_out (2v+1); covered nodes get capacity 1 across the split, everything
// else (and every link arc) gets the search cap.
class VertexCutSolver {
public:
    VertexCutSolver(const Snapshot& s, const std::vector<int>& covered, int cap)
        : n_(s.node_count), cap_(cap), head_(2 * s.node_count) {
        std::vector<bool> is_covered(n_, false);
        for (int v : covered) is_covered[v] = true;
        for (int v = 0; v < n_; ++v) add_edge(2 * v, 2 * v + 1, is_covered[v] ? 1 : cap);
        for (const auto& [u, v] : s.active_links) {
            add_edge(2 * u + 1, 2 * v, cap);
            add_edge(2 * v + 1, 2 * u, cap);
        }
        base_caps_.reserve(edges_.size());
        for (const Edge& e : edges_) base_caps_.push_back(e.cap);
    }

    // max flow from s_out to t_in, truncated at cap_
    int max_flow(int s, int t) {
        for (std::size_t i = 0; i < edges_.size(); ++i) edges_[i].cap = base_caps_[i];
        const int source = 2 * s + 1, sink = 2 * t;
        int flow = 0;
        while (flow < cap_ && augment(source, sink)) ++flow;
        return flow;
    }

private:
    struct Edge { int to; int cap; };

    void add_edge(int from, int to, int cap) {
        head_[from].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({to, cap});
        head_[to].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, 0});
    }

    bool augment(int source, int sink) {
        parent_edge_.assign(2 * n_, -1);
        parent_edge_[source] = -2;
        queue_.clear();
        queue_.push_back(source);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const int u = queue_[qi];
            for (int ei : head_[u]) {
                const Edge& e = edges_[ei];
                if (e.cap <= 0 || parent_edge_[e.to] != -1) continue;
                parent_edge_[e.to] = ei;
                if (e.to == sink) {
                    for (int v = sink; v != source;) {
                        const int pe = parent_edge_[v];
                        --edges_[pe].cap;
                        ++edges_[pe ^ 1].cap;
                        v = edges_[pe ^ 1].to;
                    }
                    return true;
                }
                queue_.push_back(e.to);
            }
        }
        return false;
    }

    int n_;
    int cap_;
    std::vector<std::vector<int>> head_;
    std::vector<Edge> edges_;
    std::vector<int> base_caps_;
    std::vector<int> parent_edge_;
    std::vector<int> queue_;
};

}  // namespace

int region_based_connectivity(const Snapshot& s, const std::vector<int>& covered, int cutoff) {
    if (!is_connected(s)) return 0;
    const int n = s.node_count;
    const int covered_size = static_cast<int>(covered.size());
    if (covered_size == 0 || n <= 2)
        return cutoff < kUnboundedConnectivity ? cutoff : kUnboundedConnectivity;

    const int cap = static_cast<int>(
        std::min<long long>(cutoff, static_cast<long long>(covered_size) + 1));
    VertexCutSolver solver(s, covered, cap);

    // A minimum cut leaves >= 2 survivors. With a source known to survive,
    // scanning sinks suffices; if every node is coverable, fall back to all
    // pairs.
    std::vector<bool> is_covered(n, false);
    for (int v : covered) is_covered[v] = true;
    int fixed_source = -1;
    for (int v = 0; v < n; ++v) {
        if (!is_covered[v]) { fixed_source = v; break; }
    }

    int best = cap;
    if (fixed_source >= 0) {
        for (int t = 0; t < n && best > 0; ++t) {
            if (t == fixed_source) continue;
            best = std::min(best, solver.max_flow(fixed_source, t));
        }
    } else {
        for (int u = 0; u < n && best > 0; ++u) {
            for (int t = u + 1; t < n && best > 0; ++t) {
                best = std::min(best, solver.max_flow(u, t));
            }
        }
    }
    if (best >= cutoff) return cutoff;
    if (best > covered_size) return kUnboundedConnectivity;
    return best;
}

namespace {

struct FaultAnalysis {
    FaultPoint point;
    CoverageTimeline coverage;
};

// Region-coverage data is independent of the transmission range, so it is
// computed once per (scenario, R) and shared across the binary search.
std::vector<FaultAnalysis> analyze_fault_points(const Scenario& scenario, double region_radius) {
    std::vector<FaultAnalysis> out;
    for (const FaultPoint& fp : enumerate_fault_points(scenario, region_radius)) {
        FaultAnalysis fa{fp, coverage_timeline(fp, scenario)};
        if (fp.kind == FaultPoint::Kind::PairIntersection &&
            fa.coverage.per_existence_interval.empty())
            continue;  // vulnerability zones never intersect
        out.push_back(std::move(fa));
    }
    return out;
}

bool ctr_f_feasible(const Scenario& scenario, const std::vector<FaultAnalysis>& faults,
                    double tr, CtrfResult::Binding* witness) {
    const int n = scenario.node_count();
    const EventTimeline timeline = build_link_timeline(scenario, tr);
    const std::vector<LinkInterval> link_ivs = intervals(timeline);

    // Node-center regions cover exactly one node and exist at all times, so
    // their RBC >= 2 test over every static interval is exactly: each link
    // interval is connected and free of articulation points.
    for (const LinkInterval& iv : link_ivs) {
        const Snapshot snap{n, iv.active_links};
        if (!is_connected(snap)) {
            if (witness) *witness = {"(fault-free connectivity)", iv.t_begin, iv.t_end, {}};
            return false;
        }
        const auto cut = articulation_points(snap);
        for (int v = 0; v < n; ++v) {
            if (cut[v]) {
                if (witness)
                    *witness = {FaultPoint{0, FaultPoint::Kind::NodeCenter, v}.describe(),
                                iv.t_begin, iv.t_end, {v}};
                return false;
            }
        }
    }

    for (const FaultAnalysis& fa : faults) {
        if (fa.point.kind == FaultPoint::Kind::NodeCenter) continue;  // handled above
        for (const auto& parts : fa.coverage.per_existence_interval) {
            for (const CoverageSubinterval& cov : parts) {
                // overlay the constant-link intervals onto this coverage span
                for (const LinkInterval& iv : link_ivs) {
                    const double lo = std::max(iv.t_begin, cov.t_begin);
                    const double hi = std::min(iv.t_end, cov.t_end);
                    if (!(hi - lo > kEpsTime)) continue;
                    const Snapshot snap{n, iv.active_links};
                    const int ni = static_cast<int>(cov.covered.size());
                    if (region_based_connectivity(snap, cov.covered, ni + 1) <= ni) {
                        if (witness) *witness = {fa.point.describe(), lo, hi, cov.covered};
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

CtrfResult compute_ctr_f(const Scenario& scenario, double region_radius, double err) {
    if (!(err > 0.0)) throw std::invalid_argument("err must be > 0");
    const auto faults = analyze_fault_points(scenario, region_radius);
    const double tr_max = scenario.tr_max();

    CtrfResult::Binding witness;
    if (!ctr_f_feasible(scenario, faults, tr_max, &witness)) {
        std::ostringstream msg;
        msg << "no transmission range up to tr_max = " << tr_max
            << " survives all region faults; violated by " << witness.fault_point
            << " during [" << witness.t_begin << ", " << witness.t_end << "]";
        throw InfeasibleError(msg.str());
    }

    CtrfResult result;
    result.err = err;
    result.region_radius = region_radius;
    result.ctr_f = min_feasible(tr_max, err, [&](double tr) {
        return ctr_f_feasible(scenario, faults, tr, nullptr);
    });
    if (result.ctr_f > 0.0) {
        CtrfResult::Binding binding;
        if (!ctr_f_feasible(scenario, faults, std::max(0.0, result.ctr_f - err), &binding))
            result.certificate = std::move(binding);
    }
    return result;
}

}  // namespace aeronet
