#include "aeronet/timeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aeronet/errors.hpp"

namespace aeronet {

namespace {

int kind_rank(EventKind k) {
    switch (k) {
        case EventKind::LinkUp: return 0;
        case EventKind::LinkDown: return 1;
        case EventKind::NodeEnterRegion: return 2;
        case EventKind::NodeLeaveRegion: return 3;
    }
    return 4;
}

AnalysisHorizon effective_horizon(const AnalysisHorizon& h) {
    if (!h.periodic) return h;
    AnalysisHorizon one = h;
    one.t_end = h.t_start + h.period_length;
    return one;
}

}  // namespace

const char* event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::LinkUp: return "link_up";
        case EventKind::LinkDown: return "link_down";
        case EventKind::NodeEnterRegion: return "node_enter_region";
        case EventKind::NodeLeaveRegion: return "node_leave_region";
    }
    return "unknown";
}

bool Event::before(const Event& x, const Event& y) {
    if (x.time != y.time) return x.time < y.time;
    if (kind_rank(x.kind) != kind_rank(y.kind)) return kind_rank(x.kind) < kind_rank(y.kind);
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.fault_point < y.fault_point;
}

EventTimeline::EventTimeline(AnalysisHorizon horizon, std::vector<Event> events,
                             std::vector<std::pair<int, int>> initial_links)
    : horizon_(horizon), events_(std::move(events)), initial_links_(std::move(initial_links)) {
    std::stable_sort(events_.begin(), events_.end(), Event::before);
    std::sort(initial_links_.begin(), initial_links_.end());
    initial_links_.erase(std::unique(initial_links_.begin(), initial_links_.end()),
                         initial_links_.end());
}

EventTimeline build_link_timeline(const Scenario& scenario, double tr) {
    if (tr < 0.0) throw std::invalid_argument("transmission range must be >= 0");
    const AnalysisHorizon horizon = effective_horizon(scenario.horizon);

    const int n = scenario.node_count();
    std::vector<Event> events;
    std::vector<std::pair<int, int>> initial;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Trajectory& a = scenario.trajectories[i];
            const Trajectory& b = scenario.trajectories[j];
            if (pairwise_distance_squared(a, b, horizon.t_start) <= tr * tr)
                initial.emplace_back(i, j);
            for (const Crossing& c : threshold_crossings(a, b, tr, horizon)) {
                Event e;
                e.time = c.time;
                e.kind = c.direction == CrossingDirection::Falling ? EventKind::LinkUp
                                                                   : EventKind::LinkDown;
                e.a = i;
                e.b = j;
                events.push_back(e);
            }
        }
    }
    return EventTimeline(horizon, std::move(events), std::move(initial));
}

EventTimeline merge_timelines(const EventTimeline& a, const EventTimeline& b) {
    const AnalysisHorizon& ha = a.horizon();
    const AnalysisHorizon& hb = b.horizon();
    if (ha.t_start != hb.t_start || ha.t_end != hb.t_end || ha.periodic != hb.periodic)
        throw std::invalid_argument("merge_timelines: horizon mismatch");

    std::vector<Event> events = a.events();
    events.insert(events.end(), b.events().begin(), b.events().end());
    std::vector<std::pair<int, int>> initial = a.initial_links();
    initial.insert(initial.end(), b.initial_links().begin(), b.initial_links().end());
    return EventTimeline(ha, std::move(events), std::move(initial));
}

std::vector<LinkInterval> intervals(const EventTimeline& timeline) {
    std::set<std::pair<int, int>> active(timeline.initial_links().begin(),
                                         timeline.initial_links().end());
    const auto& events = timeline.events();
    const double t_end = timeline.horizon().t_end;

    std::vector<LinkInterval> out;
    auto emit = [&](double t0, double t1) {
        if (!(t1 > t0)) return;
        std::vector<std::pair<int, int>> links(active.begin(), active.end());
        if (!out.empty() && out.back().active_links == links) {
            out.back().t_end = t1;  // simultaneous up/down pair cancelled out
            return;
        }
        out.push_back({t0, t1, std::move(links)});
    };

    double cursor = timeline.horizon().t_start;
    std::size_t i = 0;
    while (i < events.size()) {
        const double t = events[i].time;
        emit(cursor, t);
        cursor = std::max(cursor, t);
        for (; i < events.size() && events[i].time == t; ++i) {
            const Event& e = events[i];
            if (e.kind == EventKind::LinkUp) active.insert({e.a, e.b});
            else if (e.kind == EventKind::LinkDown) active.erase({e.a, e.b});
        }
    }
    emit(cursor, t_end);
    if (out.empty()) out.push_back({timeline.horizon().t_start, t_end, {}});
    return out;
}

std::string EventTimeline::to_csv() const {
    std::ostringstream os;
    os.precision(12);
    os << "time,kind,i,j\n";
    for (const Event& e : events_) {
        const int j = e.fault_point >= 0 ? e.fault_point : e.b;
        os << e.time << ',' << event_kind_name(e.kind) << ',' << e.a << ',' << j << '\n';
    }
    return os.str();
}

std::string EventTimeline::to_json() const {
    nlohmann::json doc;
    doc["horizon"] = {{"t_start", horizon_.t_start},
                      {"t_end", horizon_.t_end},
                      {"periodic", horizon_.periodic}};
    if (horizon_.periodic) doc["horizon"]["period_length"] = horizon_.period_length;
    doc["initial_links"] = nlohmann::json::array();
    for (const auto& [a, b] : initial_links_) doc["initial_links"].push_back({a, b});
    doc["events"] = nlohmann::json::array();
    for (const Event& e : events_) {
        nlohmann::json je = {{"time", e.time}, {"kind", event_kind_name(e.kind)}};
        if (e.kind == EventKind::LinkUp || e.kind == EventKind::LinkDown) {
            je["i"] = e.a;
            je["j"] = e.b;
        } else {
            je["node"] = e.a;
            je["fault_point"] = e.fault_point;
        }
        doc["events"].push_back(std::move(je));
    }
    return doc.dump(2);
}

}  // namespace aeronet
