#include "aeronet/dtn.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "aeronet/errors.hpp"
#include "aeronet/search.hpp"

namespace aeronet {

namespace {

// dense bitset over node ids
class NodeMask {
public:
    explicit NodeMask(int n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ull; }

    bool intersects(const NodeMask& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & o.words_[w]) return true;
        }
        return false;
    }

    // returns true if any bit was added
    bool merge(const NodeMask& o) {
        bool changed = false;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t merged = words_[w] | o.words_[w];
            changed |= merged != words_[w];
            words_[w] = merged;
        }
        return changed;
    }

    bool full() const {
        int remaining = n_;
        for (const std::uint64_t w : words_) {
            const int bits = std::min(remaining, 64);
            const std::uint64_t want = bits == 64 ? ~0ull : (1ull << bits) - 1;
            if ((w & want) != want) return false;
            remaining -= bits;
        }
        return true;
    }

    int first_missing() const {
        for (int i = 0; i < n_; ++i) {
            if (!test(i)) return i;
        }
        return -1;
    }

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

std::vector<NodeMask> component_masks(const Snapshot& snap) {
    const std::vector<int> comp = connected_components(snap);
    const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<NodeMask> masks(count, NodeMask(snap.node_count));
    for (int v = 0; v < snap.node_count; ++v) masks[comp[v]].set(v);
    return masks;
}

struct SweepResult {
    bool all_reach = false;
    int missing_from = -1;
    int missing_to = -1;
};

SweepResult sweep(const std::vector<std::vector<NodeMask>>& comps,
                  const std::vector<double>& durations, int n, double delay,
                  std::size_t start_index) {
    const std::size_t l = comps.size();
    std::vector<NodeMask> reach(n, NodeMask(n));
    for (int u = 0; u < n; ++u) reach[u].set(u);

    const double period = std::accumulate(durations.begin(), durations.end(), 0.0);
    // absorbs accumulation error in `offset` without blurring real boundaries
    const double eps = 1e-12 * std::max(1.0, period);

    double offset = 0.0;
    std::size_t steps_since_change = 0;
    for (std::size_t step = 0;; ++step) {
        if (offset > delay + eps) break;
        const std::size_t idx = (start_index + step) % l;
        bool changed = false;
        for (int u = 0; u < n; ++u) {
            for (const NodeMask& c : comps[idx]) {
                if (reach[u].intersects(c)) changed |= reach[u].merge(c);
            }
        }
        steps_since_change = changed ? 0 : steps_since_change + 1;
        bool all = true;
        for (int u = 0; u < n && all; ++u) all = reach[u].full();
        if (all) return {true, -1, -1};
        // a full period without growth cannot start growing again
        if (steps_since_change >= l) break;
        offset += durations[idx];
    }

    for (int u = 0; u < n; ++u) {
        const int missing = reach[u].first_missing();
        if (missing >= 0) return {false, u, missing};
    }
    return {true, -1, -1};
}

}  // namespace

double TopologySequence::period_total() const {
    double total = 0.0;
    for (const Entry& e : entries) total += e.duration;
    return total;
}

TopologySequence TopologySequence::from_intervals(
    int node_count, const std::vector<LinkInterval>& link_intervals) {
    TopologySequence ts;
    for (const LinkInterval& iv : link_intervals) {
        const double d = iv.t_end - iv.t_begin;
        if (!(d > 0.0)) continue;
        if (!ts.entries.empty() && ts.entries.back().snapshot.active_links == iv.active_links) {
            ts.entries.back().duration += d;
            continue;
        }
        ts.entries.push_back({{node_count, iv.active_links}, d});
    }
    return ts;
}

TopologySequence build_topology_sequence(const Scenario& scenario, double tr) {
    const EventTimeline timeline = build_link_timeline(scenario, tr);
    return TopologySequence::from_intervals(scenario.node_count(), intervals(timeline));
}

bool superimposed_connected(const TopologySequence& ts) {
    if (ts.entries.empty()) throw std::invalid_argument("empty topology sequence");
    Snapshot unioned;
    unioned.node_count = ts.entries.front().snapshot.node_count;
    for (const auto& e : ts.entries) {
        unioned.active_links.insert(unioned.active_links.end(),
                                    e.snapshot.active_links.begin(),
                                    e.snapshot.active_links.end());
    }
    std::sort(unioned.active_links.begin(), unioned.active_links.end());
    unioned.active_links.erase(
        std::unique(unioned.active_links.begin(), unioned.active_links.end()),
        unioned.active_links.end());
    return is_connected(unioned);
}

double d_max(const TopologySequence& ts) {
    if (ts.entries.empty()) throw std::invalid_argument("empty topology sequence");
    return static_cast<double>(ts.size() - 1) * ts.period_total();
}

bool connected_with_delay(const TopologySequence& ts, double delay, std::size_t start_index) {
    if (delay < 0.0) throw std::invalid_argument("delay must be >= 0");
    if (ts.entries.empty()) throw std::invalid_argument("empty topology sequence");
    if (start_index >= ts.size()) throw std::invalid_argument("start index out of range");

    const int n = ts.entries.front().snapshot.node_count;
    std::vector<std::vector<NodeMask>> comps;
    std::vector<double> durations;
    comps.reserve(ts.size());
    for (const auto& e : ts.entries) {
        comps.push_back(component_masks(e.snapshot));
        durations.push_back(e.duration);
    }
    return sweep(comps, durations, n, delay, start_index).all_reach;
}

bool connected_with_delay_all_starts(const TopologySequence& ts, double delay) {
    for (std::size_t s = 0; s < ts.size(); ++s) {
        if (!connected_with_delay(ts, delay, s)) return false;
    }
    return true;
}

namespace {

bool ctr_d_feasible(const Scenario& scenario, double tr, double delay, bool all_starts,
                    CtrdResult::Binding* witness) {
    const TopologySequence ts = build_topology_sequence(scenario, tr);
    if (!superimposed_connected(ts)) {
        if (witness) {
            witness->failing_starts = {0};
            // report some pair split by the superimposed graph
            Snapshot unioned{scenario.node_count(), {}};
            for (const auto& e : ts.entries) {
                unioned.active_links.insert(unioned.active_links.end(),
                                            e.snapshot.active_links.begin(),
                                            e.snapshot.active_links.end());
            }
            const auto comp = connected_components(unioned);
            for (int v = 0; v < scenario.node_count(); ++v) {
                if (comp[v] != comp[0]) {
                    witness->from = 0;
                    witness->to = v;
                    break;
                }
            }
        }
        return false;
    }
    if (delay >= d_max(ts)) return true;

    const int n = scenario.node_count();
    std::vector<std::vector<NodeMask>> comps;
    std::vector<double> durations;
    for (const auto& e : ts.entries) {
        comps.push_back(component_masks(e.snapshot));
        durations.push_back(e.duration);
    }

    bool ok = true;
    const std::size_t last = all_starts ? ts.size() : 1;
    for (std::size_t s = 0; s < last; ++s) {
        const SweepResult r = sweep(comps, durations, n, delay, s);
        if (r.all_reach) continue;
        ok = false;
        if (!witness) return false;
        if (witness->failing_starts.empty()) {
            witness->from = r.missing_from;
            witness->to = r.missing_to;
        }
        witness->failing_starts.push_back(s);
    }
    return ok;
}

}  // namespace

CtrdResult compute_ctr_d(const Scenario& scenario, double delay, double err, bool all_starts) {
    if (!(err > 0.0)) throw std::invalid_argument("err must be > 0");
    if (delay < 0.0) throw std::invalid_argument("delay must be >= 0");
    const double tr_max = scenario.tr_max();

    CtrdResult::Binding witness;
    if (!ctr_d_feasible(scenario, tr_max, delay, all_starts, &witness)) {
        std::ostringstream msg;
        msg << "no temporal path with delay " << delay << " between nodes " << witness.from
            << " and " << witness.to << " even at tr_max = " << tr_max;
        throw InfeasibleError(msg.str());
    }

    CtrdResult result;
    result.err = err;
    result.delay = delay;
    result.all_starts = all_starts;
    result.ctr_d = min_feasible(tr_max, err, [&](double tr) {
        return ctr_d_feasible(scenario, tr, delay, all_starts, nullptr);
    });
    if (result.ctr_d > 0.0) {
        CtrdResult::Binding binding;
        if (!ctr_d_feasible(scenario, std::max(0.0, result.ctr_d - err), delay, all_starts,
                            &binding))
            result.certificate = std::move(binding);
    }
    return result;
}

}  // namespace aeronet
