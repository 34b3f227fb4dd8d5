#ifndef HIPROP_ENGINE_HPP
#define HIPROP_ENGINE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "hiprop/errors.hpp"
#include "hiprop/params.hpp"
#include "hiprop/rng.hpp"
#include "hiprop/traffic.hpp"

namespace hiprop {

enum class SchemeId { vmimo, flooding, reverse_aided };

// A broadcast scheme selection; the unicast scheme carries its per-hop
// handshake cost in slots.
struct SchemeKind {
    SchemeId kind = SchemeId::vmimo;
    int handshake_slots = 1;

    static SchemeKind vmimo() { return {SchemeId::vmimo, 1}; }
    static SchemeKind flooding() { return {SchemeId::flooding, 1}; }
    static SchemeKind reverse_aided(int handshake = 1) {
        return {SchemeId::reverse_aided, handshake};
    }
};

inline const char* scheme_name(const SchemeKind& s) {
    switch (s.kind) {
        case SchemeId::vmimo: return "vmimo";
        case SchemeId::flooding: return "flooding";
        default: return "reverse_aided";
    }
}

// Renewal-state label of one slot: the head advanced by a decode (PROP_I),
// rode a forward-lane carrier (PROP_II), or sat on a static reverse-lane
// vehicle (STOP).
enum class StateLabel { PROP_I, PROP_II, STOP };

inline const char* state_label_name(StateLabel s) {
    switch (s) {
        case StateLabel::PROP_I: return "PROP_I";
        case StateLabel::PROP_II: return "PROP_II";
        default: return "STOP";
    }
}

struct SlotRecord {
    long long slot_index;
    double head_before;
    double head_after;
    StateLabel state_label;
    long long newly_informed;
};

// One completed renewal cycle: a propagate run then a stop run.
struct CycleRecord {
    double propagate_duration; // s
    double stop_duration;      // s
    double distance;           // m
};

struct IpsEstimate {
    double mean = 0.0;            // m/s
    double ci95_halfwidth = 0.0;  // m/s, across replication means
    long long replications = 0;
    long long slots_per_rep = 0;
    long long warmup_slots = 0;
};

struct Budget {
    long long max_slots = 20000;
    long long min_cycles = 0; // 0: run to max_slots; else stop once reached
};

struct EngineOptions {
    bool prune_trail = true;       // retire vehicles > 2R behind the head
    std::ostream* trace = nullptr; // per-slot CSV when non-null
};

namespace detail {

// Shared straggler-list maintenance: drop entries that decoded, fell behind
// the retirement line, or caught back up past the head (the ahead-window scan
// covers those).
inline void filter_stragglers(std::vector<std::ptrdiff_t>& list,
                              const LaneSnapshot& lane, double head,
                              double retire_line, bool retire) {
    std::size_t keep = 0;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::ptrdiff_t i = list[k];
        if (i < lane.live_begin) continue;
        if (lane.informed[static_cast<std::size_t>(i)]) continue;
        const double x = lane.position(i);
        if (x > head) continue;
        if (retire && x < retire_line) continue;
        list[keep++] = i;
    }
    list.resize(keep);
}

// Combined decode statistic for a receiver at x: sum of 1/d^2 over every
// informed vehicle of both lanes within distance R.
inline double combined_statistic(const RoadState& state, double x, double R) {
    double stat = 0.0;
    for (Lane l : {Lane::reverse, Lane::forward}) {
        const LaneSnapshot& lane = state.lane(l);
        const std::ptrdiff_t lo = lane.lower_bound(x - R);
        const std::ptrdiff_t hi = lane.upper_bound(x + R);
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            if (!lane.informed[static_cast<std::size_t>(i)]) continue;
            const double d = x - lane.position(i);
            stat += 1.0 / (d * d);
        }
    }
    return stat;
}

// Single-link test: any informed vehicle of either lane within distance r.
inline bool any_informed_within(const RoadState& state, double x, double r) {
    for (Lane l : {Lane::reverse, Lane::forward}) {
        const LaneSnapshot& lane = state.lane(l);
        const std::ptrdiff_t lo = lane.lower_bound(x - r);
        const std::ptrdiff_t hi = lane.upper_bound(x + r);
        for (std::ptrdiff_t i = lo; i < hi; ++i)
            if (lane.informed[static_cast<std::size_t>(i)]) return true;
    }
    return false;
}

} // namespace detail

// Executes one slot: evaluates the scheme's decode rule against the informed
// set frozen at slot start (no intra-slot relaying), applies the new flags,
// advances positions, relabels the slot, and restores the traffic horizon.
inline SlotRecord step_slot(RoadState& state, const ScenarioParams& p,
                            const SchemeKind& scheme, TrafficStreams& streams,
                            const EngineOptions& opt = {}) {
    const double head_pre = state.head_position;
    const double retire_line = head_pre - 2.0 * p.R;
    const double thr = 1.0 / (p.r * p.r);

    detail::filter_stragglers(state.stragglers_reverse, state.reverse, head_pre,
                              retire_line, opt.prune_trail);
    detail::filter_stragglers(state.stragglers_forward, state.forward, head_pre,
                              retire_line, opt.prune_trail);

    // Candidates: overtaken-but-uninformed stragglers plus every uninformed
    // vehicle in the decode window ahead of the head. The two groups are
    // disjoint (stragglers sit at or behind the head).
    std::vector<std::pair<Lane, std::ptrdiff_t>> newly;
    const auto consider = [&](Lane l, std::ptrdiff_t i) {
        const LaneSnapshot& lane = state.lane(l);
        const double x = lane.position(i);
        bool decodes = false;
        if (scheme.kind == SchemeId::vmimo)
            decodes = detail::combined_statistic(state, x, p.R) >= thr;
        else if (scheme.kind == SchemeId::flooding)
            decodes = detail::any_informed_within(state, x, p.r);
        if (decodes) newly.emplace_back(l, i);
    };

    if (scheme.kind == SchemeId::reverse_aided) {
        if (state.unicast_cooldown > 0) {
            state.unicast_cooldown -= 1;
        } else {
            // Greedy unicast hop: the farthest uninformed vehicle (either
            // lane) within single-link range ahead of the head.
            Lane best_lane = Lane::reverse;
            std::ptrdiff_t best_idx = -1;
            double best_x = head_pre;
            for (Lane l : {Lane::reverse, Lane::forward}) {
                const LaneSnapshot& lane = state.lane(l);
                const std::ptrdiff_t lo = lane.upper_bound(head_pre);
                const std::ptrdiff_t hi = lane.upper_bound(head_pre + p.r);
                for (std::ptrdiff_t i = hi - 1; i >= lo; --i) {
                    if (lane.informed[static_cast<std::size_t>(i)]) continue;
                    const double x = lane.position(i);
                    if (x > best_x) {
                        best_x = x;
                        best_lane = l;
                        best_idx = i;
                    }
                    break; // farthest uninformed in this lane found
                }
            }
            if (best_idx >= 0) {
                newly.emplace_back(best_lane, best_idx);
                state.unicast_cooldown = scheme.handshake_slots - 1;
            }
        }
    } else {
        for (const std::ptrdiff_t i : state.stragglers_reverse)
            consider(Lane::reverse, i);
        for (const std::ptrdiff_t i : state.stragglers_forward)
            consider(Lane::forward, i);
        for (Lane l : {Lane::reverse, Lane::forward}) {
            const LaneSnapshot& lane = state.lane(l);
            const std::ptrdiff_t lo = lane.upper_bound(head_pre);
            const std::ptrdiff_t hi = lane.upper_bound(head_pre + p.R);
            for (std::ptrdiff_t i = lo; i < hi; ++i)
                if (!lane.informed[static_cast<std::size_t>(i)]) consider(l, i);
        }
    }

    bool newly_ahead = false;
    for (const auto& [l, i] : newly) {
        LaneSnapshot& lane = state.lane(l);
        lane.informed[static_cast<std::size_t>(i)] = 1;
        if (lane.position(i) > head_pre) newly_ahead = true;
        auto& best = l == Lane::reverse ? state.best_informed_reverse
                                        : state.best_informed_forward;
        best = std::max(best, i);
    }

    advance_slot(state, p);
    const double head_post = state.head_position;

    StateLabel label;
    if (newly_ahead)
        label = StateLabel::PROP_I;
    else if (state.head_lane == Lane::forward)
        label = StateLabel::PROP_II;
    else
        label = StateLabel::STOP;

    // Vehicles the head just passed join the straggler lists if uninformed.
    if (head_post > head_pre) {
        {
            const LaneSnapshot& rev = state.reverse;
            const std::ptrdiff_t lo = rev.upper_bound(head_pre);
            const std::ptrdiff_t hi = rev.upper_bound(head_post);
            for (std::ptrdiff_t i = lo; i < hi; ++i)
                if (!rev.informed[static_cast<std::size_t>(i)])
                    state.stragglers_reverse.push_back(i);
        }
        {
            // A forward vehicle is newly overtaken when it was ahead of the
            // old head before this slot's shift and at or behind the new one
            // after it.
            const LaneSnapshot& fwd = state.forward;
            const double shift = 2.0 * p.v * p.tau;
            const std::ptrdiff_t lo = fwd.upper_bound(head_pre + shift);
            const std::ptrdiff_t hi = fwd.upper_bound(head_post);
            for (std::ptrdiff_t i = lo; i < hi; ++i)
                if (!fwd.informed[static_cast<std::size_t>(i)])
                    state.stragglers_forward.push_back(i);
        }
    }

    ensure_horizon(state, p, streams, -1.0, -1.0, opt.prune_trail);

    SlotRecord rec;
    rec.slot_index = state.slot_index - 1; // the slot just executed
    rec.head_before = head_pre;
    rec.head_after = head_post;
    rec.state_label = label;
    rec.newly_informed = static_cast<long long>(newly.size());
    return rec;
}

// Everything one replication produces: the single-replication estimate, the
// post-warm-up renewal cycles, and diagnostics used by property checks.
struct ReplicationResult {
    IpsEstimate estimate;
    std::vector<CycleRecord> cycles;
    double head_at_warmup = 0.0;
    double head_final = 0.0;
    long long warmup_end_slot = 0;
    long long slots_run = 0;
    std::array<std::array<long long, 3>, 3> transitions{}; // [from][to]
    std::array<long long, 3> label_counts{};
    double mean_prop1_run_slots = 0.0; // completed PROP_I runs, post-warm-up
    double mean_stop_run_slots = 0.0;  // completed STOP runs, post-warm-up
    double max_slot_jump = 0.0;        // m, max head_after - head_before
};

namespace detail {

inline RoadState initial_road(const ScenarioParams& p, const Budget& budget,
                              TrafficStreams& streams) {
    RoadState state;
    // Reverse lane: a block behind the source deep enough for the trail
    // window, the source vehicle itself at the origin, lazy traffic ahead.
    {
        std::vector<double> west;
        double x = 0.0;
        if (p.lambda_r > 0.0) {
            const double west_limit = -2.0 * p.R;
            for (;;) {
                x -= streams.reverse_gaps.exponential(p.lambda_r);
                if (x < west_limit) break;
                west.push_back(x);
            }
        }
        LaneSnapshot& rev = state.reverse;
        rev.lane = Lane::reverse;
        for (auto it = west.rbegin(); it != west.rend(); ++it) {
            rev.positions.push_back(*it);
            rev.informed.push_back(0);
        }
        rev.positions.push_back(0.0);
        rev.informed.push_back(1);
        rev.frontier = 0.0;
        state.best_informed_reverse = rev.size() - 1;
    }
    // Forward lane: a block deep enough that every vehicle able to catch up
    // to the head within the budget already exists, lazy traffic ahead.
    {
        std::vector<double> west;
        double x = 0.0;
        if (p.lambda_f > 0.0) {
            const double west_limit =
                -(2.0 * p.R +
                  2.0 * p.v * p.tau * static_cast<double>(budget.max_slots));
            for (;;) {
                x -= streams.forward_gaps.exponential(p.lambda_f);
                if (x < west_limit) break;
                west.push_back(x);
            }
        }
        LaneSnapshot& fwd = state.forward;
        fwd.lane = Lane::forward;
        for (auto it = west.rbegin(); it != west.rend(); ++it) {
            fwd.positions.push_back(*it);
            fwd.informed.push_back(0);
        }
        fwd.frontier = 0.0;
    }
    state.head_position = 0.0;
    state.head_lane = Lane::reverse;
    return state;
}

} // namespace detail

// Runs one replication: seeds the beacon at a reverse-lane vehicle at the
// origin, discards a warm-up of max(200 slots, 5 completed renewal cycles)
// (capped at half the budget), then measures IPS as head displacement over
// measured time. Deterministic per seed.
inline ReplicationResult run_scenario(const ScenarioParams& p,
                                      const SchemeKind& scheme,
                                      const Budget& budget, std::uint64_t seed,
                                      const EngineOptions& opt = {}) {
    require_basic(p);
    if (scheme.handshake_slots < 1)
        throw invalid_input("requires handshake_slots >= 1");
    if (budget.max_slots < 400)
        throw under_budget(
            "budget.max_slots < 400 cannot cover warm-up plus measurement");

    TrafficStreams streams = TrafficStreams::from_seed(seed);
    RoadState state = detail::initial_road(p, budget, streams);
    ensure_horizon(state, p, streams, -1.0, -1.0, opt.prune_trail);

    if (opt.trace)
        *opt.trace << "slot,head_before,head_after,state,newly_informed\n";

    ReplicationResult res;
    const long long fallback_warm_end = budget.max_slots / 2;
    bool in_warmup = true;
    long long cycles_completed = 0;       // since run start (warm-up rule)
    long long measured_cycles = 0;        // since warm-up end (budget rule)
    bool have_prev = false;
    StateLabel prev_label = StateLabel::STOP;

    // Current-cycle accumulators (a cycle = a propagate run then a stop run;
    // cycle boundaries are STOP -> non-STOP transitions).
    long long cyc_prop_slots = 0, cyc_stop_slots = 0;
    double cyc_head_start = state.head_position;

    long long prop1_run = 0, prop1_runs = 0, prop1_run_slots = 0;
    long long stop_run = 0, stop_runs = 0, stop_run_slots = 0;

    long long slot = 0;
    for (; slot < budget.max_slots; ++slot) {
        SlotRecord rec = step_slot(state, p, scheme, streams, opt);
        if (opt.trace)
            *opt.trace << rec.slot_index << ',' << rec.head_before << ','
                       << rec.head_after << ','
                       << state_label_name(rec.state_label) << ','
                       << rec.newly_informed << '\n';

        const StateLabel label = rec.state_label;
        const bool cycle_boundary = have_prev && prev_label == StateLabel::STOP &&
                                    label != StateLabel::STOP;
        if (cycle_boundary) {
            ++cycles_completed;
            if (!in_warmup) {
                ++measured_cycles;
                res.cycles.push_back(CycleRecord{
                    static_cast<double>(cyc_prop_slots) * p.tau,
                    static_cast<double>(cyc_stop_slots) * p.tau,
                    rec.head_before - cyc_head_start});
            }
            cyc_prop_slots = 0;
            cyc_stop_slots = 0;
            cyc_head_start = rec.head_before;
        }

        if (in_warmup && slot + 1 >= 200 && cycles_completed >= 5) {
            in_warmup = false;
            res.warmup_end_slot = slot + 1;
            res.head_at_warmup = rec.head_after;
            cyc_prop_slots = 0;
            cyc_stop_slots = 0;
            cyc_head_start = rec.head_after;
        } else if (in_warmup && slot + 1 >= fallback_warm_end) {
            in_warmup = false;
            res.warmup_end_slot = slot + 1;
            res.head_at_warmup = rec.head_after;
            cyc_prop_slots = 0;
            cyc_stop_slots = 0;
            cyc_head_start = rec.head_after;
        }

        if (label == StateLabel::STOP)
            ++cyc_stop_slots;
        else
            ++cyc_prop_slots;

        if (!in_warmup) {
            const int li = static_cast<int>(label);
            ++res.label_counts[static_cast<std::size_t>(li)];
            if (have_prev)
                ++res.transitions[static_cast<std::size_t>(prev_label)]
                                 [static_cast<std::size_t>(li)];
            res.max_slot_jump =
                std::max(res.max_slot_jump, rec.head_after - rec.head_before);

            if (label == StateLabel::PROP_I) {
                ++prop1_run;
            } else if (prop1_run > 0) {
                ++prop1_runs;
                prop1_run_slots += prop1_run;
                prop1_run = 0;
            }
            if (label == StateLabel::STOP) {
                ++stop_run;
            } else if (stop_run > 0) {
                ++stop_runs;
                stop_run_slots += stop_run;
                stop_run = 0;
            }
        }

        prev_label = label;
        have_prev = true;

        if (!in_warmup && budget.min_cycles > 0 &&
            measured_cycles >= budget.min_cycles) {
            ++slot;
            break;
        }
    }

    res.slots_run = slot;
    res.head_final = state.head_position;
    const long long measured_slots = res.slots_run - res.warmup_end_slot;
    const double ips =
        measured_slots > 0
            ? (res.head_final - res.head_at_warmup) /
                  (static_cast<double>(measured_slots) * p.tau)
            : 0.0;
    res.estimate.mean = ips;
    res.estimate.ci95_halfwidth = 0.0;
    res.estimate.replications = 1;
    res.estimate.slots_per_rep = res.slots_run;
    res.estimate.warmup_slots = res.warmup_end_slot;
    if (prop1_runs > 0)
        res.mean_prop1_run_slots =
            static_cast<double>(prop1_run_slots) / static_cast<double>(prop1_runs);
    if (stop_runs > 0)
        res.mean_stop_run_slots =
            static_cast<double>(stop_run_slots) / static_cast<double>(stop_runs);
    return res;
}

// Mean and normal-approximation 95% confidence interval across replication
// means. Values are sorted first so the estimate is bit-identical under any
// permutation of the inputs.
inline IpsEstimate estimate_ips(std::vector<double> values,
                                long long slots_per_rep = 0,
                                long long warmup_slots = 0) {
    if (values.size() < 2)
        throw invalid_input("requires at least 2 replications");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double x : values) sum += x;
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : values) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    IpsEstimate est;
    est.mean = mean;
    est.ci95_halfwidth = 1.96 * sd / std::sqrt(n);
    est.replications = static_cast<long long>(values.size());
    est.slots_per_rep = slots_per_rep;
    est.warmup_slots = warmup_slots;
    return est;
}

inline IpsEstimate estimate_ips(const std::vector<ReplicationResult>& reps) {
    std::vector<double> values;
    values.reserve(reps.size());
    for (const auto& r : reps) values.push_back(r.estimate.mean);
    long long slots = reps.empty() ? 0 : reps.front().slots_run;
    long long warm = reps.empty() ? 0 : reps.front().warmup_end_slot;
    return estimate_ips(std::move(values), slots, warm);
}

// Report of a coupled two-scheme run on one shared traffic realization.
struct DominanceReport {
    long long slots = 0;
    long long violations = 0;
    long long first_violation_slot = -1;
    std::vector<double> head_gap; // vmimo head - flooding head, per slot
};

// Runs vmimo and flooding over byte-identical traffic (same seed, and a
// realization that is a pure function of the seed because gaps are drawn from
// per-lane streams in generation order). Pruning is disabled so the informed
// flags of the two runs stay index-aligned; the single-link decode set must
// be contained in the combined decode set at every slot.
inline DominanceReport coupled_dominance_run(const ScenarioParams& p,
                                             const Budget& budget,
                                             std::uint64_t seed,
                                             std::ostream* violation_dump = nullptr) {
    require_basic(p);
    if (budget.max_slots < 1) throw invalid_input("requires max_slots >= 1");

    EngineOptions opt;
    opt.prune_trail = false;

    TrafficStreams streams_v = TrafficStreams::from_seed(seed);
    TrafficStreams streams_f = TrafficStreams::from_seed(seed);
    RoadState state_v = detail::initial_road(p, budget, streams_v);
    RoadState state_f = detail::initial_road(p, budget, streams_f);
    ensure_horizon(state_v, p, streams_v, -1.0, -1.0, false);
    ensure_horizon(state_f, p, streams_f, -1.0, -1.0, false);

    DominanceReport rep;
    rep.head_gap.reserve(static_cast<std::size_t>(budget.max_slots));
    const SchemeKind vm = SchemeKind::vmimo();
    const SchemeKind fl = SchemeKind::flooding();
    for (long long slot = 0; slot < budget.max_slots; ++slot) {
        step_slot(state_v, p, vm, streams_v, opt);
        step_slot(state_f, p, fl, streams_f, opt);
        for (Lane l : {Lane::reverse, Lane::forward}) {
            const LaneSnapshot& lf = state_f.lane(l);
            const LaneSnapshot& lv = state_v.lane(l);
            for (std::ptrdiff_t i = 0; i < lf.size(); ++i) {
                if (!lf.informed[static_cast<std::size_t>(i)]) continue;
                const bool covered =
                    i < lv.size() && lv.informed[static_cast<std::size_t>(i)];
                if (!covered) {
                    ++rep.violations;
                    if (rep.first_violation_slot < 0)
                        rep.first_violation_slot = slot;
                    if (violation_dump)
                        *violation_dump
                            << "slot " << slot << " lane " << lane_name(l)
                            << " index " << i << " position " << lf.position(i)
                            << " informed under flooding only\n";
                }
            }
        }
        rep.head_gap.push_back(state_v.head_position - state_f.head_position);
    }
    rep.slots = budget.max_slots;
    return rep;
}

} // namespace hiprop

#endif // HIPROP_ENGINE_HPP
