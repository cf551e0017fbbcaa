#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aeronet/scenario.hpp"

namespace aeronet {

enum class EventKind {
    LinkUp,
    LinkDown,
    NodeEnterRegion,
    NodeLeaveRegion,
};

struct Event {
    double time = 0.0;
    EventKind kind = EventKind::LinkUp;
    // LinkUp/LinkDown: a < b are the endpoints.
    // NodeEnterRegion/NodeLeaveRegion: a is the node, fault_point the region id.
    int a = 0;
    int b = 0;
    int fault_point = -1;

    // deterministic order at equal times: link events first, then region
    // events, lexicographic on indices
    static bool before(const Event& x, const Event& y);
};

const char* event_kind_name(EventKind kind);

// Sorted event sequence over one horizon, plus the initial active-link set at
// horizon start. Immutable after construction.
class EventTimeline {
public:
    EventTimeline(AnalysisHorizon horizon, std::vector<Event> events,
                  std::vector<std::pair<int, int>> initial_links);

    const AnalysisHorizon& horizon() const { return horizon_; }
    const std::vector<Event>& events() const { return events_; }
    const std::vector<std::pair<int, int>>& initial_links() const { return initial_links_; }

    std::string to_csv() const;
    std::string to_json() const;

private:
    AnalysisHorizon horizon_;
    std::vector<Event> events_;
    std::vector<std::pair<int, int>> initial_links_;
};

// All link state changes of the scenario at transmission range tr: per-pair
// threshold crossings, collected and sorted.
EventTimeline build_link_timeline(const Scenario& scenario, double tr);

// Single sorted timeline over both event sets. Horizons must match; initial
// link sets are united.
EventTimeline merge_timelines(const EventTimeline& a, const EventTimeline& b);

struct LinkInterval {
    double t_begin = 0.0;
    double t_end = 0.0;
    std::vector<std::pair<int, int>> active_links;  // sorted pairs, a < b
};

// Contiguous partition of the horizon into constant-link-set intervals.
// Zero-length gaps between simultaneous events are skipped and adjacent
// intervals with identical link sets are merged.
std::vector<LinkInterval> intervals(const EventTimeline& timeline);

}  // namespace aeronet
