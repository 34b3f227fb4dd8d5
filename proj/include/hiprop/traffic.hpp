#ifndef HIPROP_TRAFFIC_HPP
#define HIPROP_TRAFFIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <ostream>
#include <vector>

#include "hiprop/errors.hpp"
#include "hiprop/params.hpp"
#include "hiprop/rng.hpp"

namespace hiprop {

enum class Lane { reverse, forward };

inline const char* lane_name(Lane l) {
    return l == Lane::reverse ? "reverse" : "forward";
}

// One lane's vehicle population in the reverse-lane reference frame.
//
// Positions are stored as immutable base coordinates plus a lane-wide offset
// (zero for the reverse lane, accumulated motion for the forward lane), so the
// n-th generated vehicle is a pure function of the gap stream regardless of
// when lazy extension materialized it. `live_begin` is a logical prune line:
// vehicles before it have fallen far behind the head, are treated as informed,
// and take no further part in any scan.
struct LaneSnapshot {
    Lane lane = Lane::reverse;
    std::vector<double> positions;   // base coordinates, strictly increasing
    std::vector<char> informed;      // parallel flags, 0/1, false->true only
    double offset = 0.0;             // added to every base coordinate
    double frontier = 0.0;           // base coordinate generation has reached
    std::ptrdiff_t live_begin = 0;   // index of the first live vehicle

    double position(std::ptrdiff_t i) const {
        return positions[static_cast<std::size_t>(i)] + offset;
    }
    std::ptrdiff_t size() const {
        return static_cast<std::ptrdiff_t>(positions.size());
    }
    // First index with position > x (live region only).
    std::ptrdiff_t upper_bound(double x) const {
        auto it = std::upper_bound(positions.begin() + live_begin, positions.end(),
                                   x - offset);
        return it - positions.begin();
    }
    // First index with position >= x (live region only).
    std::ptrdiff_t lower_bound(double x) const {
        auto it = std::lower_bound(positions.begin() + live_begin, positions.end(),
                                   x - offset);
        return it - positions.begin();
    }
};

// The pair of dedicated gap streams that fully determine a traffic
// realization; keeping one stream per lane makes the n-th gap of a lane the
// n-th draw of its stream, so scheme-dependent extension schedules cannot
// perturb the realization (required for coupled scheme comparisons).
struct TrafficStreams {
    RngStream reverse_gaps;
    RngStream forward_gaps;

    static TrafficStreams from_seed(std::uint64_t seed) {
        return TrafficStreams{RngStream(derive_seed(seed, 1)),
                              RngStream(derive_seed(seed, 2))};
    }
    RngStream& for_lane(Lane l) {
        return l == Lane::reverse ? reverse_gaps : forward_gaps;
    }
};

// Full simulation state: the two lanes, the rightmost informed vehicle
// (head), and the per-run bookkeeping the stepper maintains (rightmost
// informed index per lane, overtaken-but-uninformed stragglers, and the
// unicast cadence counter of the reverse-aided scheme).
struct RoadState {
    LaneSnapshot reverse{Lane::reverse};
    LaneSnapshot forward{Lane::forward};
    long long slot_index = 0;
    double head_position = 0.0;
    Lane head_lane = Lane::reverse;
    std::ptrdiff_t best_informed_reverse = -1;
    std::ptrdiff_t best_informed_forward = -1;
    std::vector<std::ptrdiff_t> stragglers_reverse;
    std::vector<std::ptrdiff_t> stragglers_forward;
    int unicast_cooldown = 0;

    LaneSnapshot& lane(Lane l) { return l == Lane::reverse ? reverse : forward; }
    const LaneSnapshot& lane(Lane l) const {
        return l == Lane::reverse ? reverse : forward;
    }
};

namespace detail {

// Appends one vehicle at a strictly increasing base coordinate; collisions at
// double precision are resolved by redrawing the gap.
inline double next_coordinate(double from, double lambda, RngStream& rng) {
    double x = from + rng.exponential(lambda);
    while (!(x > from)) x = from + rng.exponential(lambda);
    return x;
}

} // namespace detail

// Poisson lane over [x_min, x_max]: i.i.d. exponential gaps with mean
// 1/lambda starting from x_min; empty when lambda == 0.
inline LaneSnapshot generate_lane(double lambda, double x_min, double x_max,
                                  RngStream& rng, Lane tag = Lane::reverse) {
    if (!(lambda >= 0.0)) throw invalid_input("requires lambda >= 0");
    if (!(x_min < x_max)) throw invalid_input("requires x_min < x_max");
    LaneSnapshot lane;
    lane.lane = tag;
    lane.frontier = x_min;
    if (lambda == 0.0) return lane;
    double x = x_min;
    for (;;) {
        x = detail::next_coordinate(x, lambda, rng);
        if (x > x_max) break;
        lane.positions.push_back(x);
        lane.informed.push_back(0);
    }
    lane.frontier = lane.positions.empty() ? x_min : lane.positions.back();
    return lane;
}

// One slot of kinematics: reverse vehicles stay put, every forward vehicle
// advances by exactly 2*v*tau (the closing speed between the lanes), and the
// head is refreshed because a forward-lane head carries the beacon with it.
inline void advance_slot(RoadState& state, const ScenarioParams& p) {
    state.forward.offset += 2.0 * p.v * p.tau;
    state.slot_index += 1;
    double best = -std::numeric_limits<double>::infinity();
    Lane best_lane = state.head_lane;
    if (state.best_informed_reverse >= 0) {
        best = state.reverse.position(state.best_informed_reverse);
        best_lane = Lane::reverse;
    }
    if (state.best_informed_forward >= 0) {
        const double f = state.forward.position(state.best_informed_forward);
        if (f > best) {
            best = f;
            best_lane = Lane::forward;
        }
    }
    // Strictly larger wins; an exact coordinate tie keeps the current lane tag.
    if (best > state.head_position) {
        state.head_position = best;
        state.head_lane = best_lane;
    }
}

// Keeps generated traffic ahead of anything the beacon can reach and retires
// vehicles hopelessly far behind. New vehicles are appended east of each
// lane's frontier up to head + horizon_margin; reverse vehicles more than
// trail_margin behind the head are moved behind the live line and flagged
// informed so they leave the uninformed accounting for good.
inline void ensure_horizon(RoadState& state, const ScenarioParams& p,
                           TrafficStreams& streams, double horizon_margin = -1.0,
                           double trail_margin = -1.0, bool prune = true) {
    if (horizon_margin < 0.0) horizon_margin = 10.0 * p.R;
    if (trail_margin < 0.0) trail_margin = 2.0 * p.R;

    const double lambdas[2] = {p.lambda_r, p.lambda_f};
    for (Lane l : {Lane::reverse, Lane::forward}) {
        LaneSnapshot& lane = state.lane(l);
        const double lambda = lambdas[l == Lane::reverse ? 0 : 1];
        if (lambda <= 0.0) continue;
        const double target = state.head_position - lane.offset + horizon_margin;
        RngStream& rng = streams.for_lane(l);
        while (lane.frontier < target) {
            lane.frontier = detail::next_coordinate(lane.frontier, lambda, rng);
            lane.positions.push_back(lane.frontier);
            lane.informed.push_back(0);
        }
    }
    if (prune) {
        LaneSnapshot& rev = state.reverse;
        const double cut = state.head_position - trail_margin;
        while (rev.live_begin < rev.size() && rev.position(rev.live_begin) < cut) {
            rev.informed[static_cast<std::size_t>(rev.live_begin)] = 1;
            ++rev.live_begin;
        }
    }
}

// Debug/golden dump: one line per live vehicle, `lane position informed_flag`.
inline void dump_lanes(const RoadState& state, std::ostream& os) {
    const auto emit = [&os](const LaneSnapshot& lane) {
        for (std::ptrdiff_t i = lane.live_begin; i < lane.size(); ++i)
            os << lane_name(lane.lane) << ' ' << std::setprecision(17)
               << lane.position(i) << ' '
               << int(lane.informed[static_cast<std::size_t>(i)]) << '\n';
    };
    emit(state.reverse);
    emit(state.forward);
}

// Two-sided Kolmogorov-Smirnov p-value of the hypothesis that `gaps` are
// exponential with the given rate, via the asymptotic Kolmogorov series.
inline double exponential_ks_pvalue(std::vector<double> gaps, double lambda) {
    if (gaps.empty()) throw invalid_input("requires nonempty sample");
    if (!(lambda > 0.0)) throw invalid_input("requires lambda > 0");
    std::sort(gaps.begin(), gaps.end());
    const std::size_t n = gaps.size();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = 1.0 - std::exp(-lambda * gaps[i]);
        d = std::max(d, std::abs(cdf - static_cast<double>(i + 1) / n));
        d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
    }
    const double x = d * std::sqrt(static_cast<double>(n));
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        p += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-16) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

} // namespace hiprop

#endif // HIPROP_TRAFFIC_HPP
