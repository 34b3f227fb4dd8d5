#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "hiprop/traffic.hpp"

using namespace hiprop;

TEST_CASE("lane generation basics", "[traffic]") {
    RngStream rng(derive_seed(99, 1));
    const LaneSnapshot empty = generate_lane(0.0, 0.0, 1e6, rng);
    CHECK(empty.positions.empty());

    const LaneSnapshot lane = generate_lane(0.01, 0.0, 1e6, rng, Lane::forward);
    const double n = static_cast<double>(lane.positions.size());
    // Poisson(10000): five-sigma acceptance band.
    CHECK(n > 10000.0 - 5.0 * 100.0);
    CHECK(n < 10000.0 + 5.0 * 100.0);
    CHECK(lane.lane == Lane::forward);
    CHECK(std::is_sorted(lane.positions.begin(), lane.positions.end()));
    CHECK(std::adjacent_find(lane.positions.begin(), lane.positions.end()) ==
          lane.positions.end()); // strictly increasing
    CHECK(lane.positions.front() > 0.0);
    CHECK(lane.positions.back() <= 1e6);
    CHECK(lane.frontier == lane.positions.back());

    double gap_sum = lane.positions.front();
    for (std::size_t i = 1; i < lane.positions.size(); ++i)
        gap_sum += lane.positions[i] - lane.positions[i - 1];
    CHECK(gap_sum / n == Catch::Approx(100.0).epsilon(0.05));
}

TEST_CASE("lane generation is deterministic per seed", "[traffic]") {
    RngStream a(derive_seed(1234, 1));
    RngStream b(derive_seed(1234, 1));
    RngStream c(derive_seed(1235, 1));
    const LaneSnapshot la = generate_lane(0.005, -500.0, 5000.0, a);
    const LaneSnapshot lb = generate_lane(0.005, -500.0, 5000.0, b);
    const LaneSnapshot lc = generate_lane(0.005, -500.0, 5000.0, c);
    CHECK(la.positions == lb.positions);
    CHECK(la.positions != lc.positions);
    CHECK_THROWS_AS(generate_lane(-1.0, 0.0, 1.0, a), invalid_input);
    CHECK_THROWS_AS(generate_lane(0.01, 1.0, 0.0, a), invalid_input);
}

TEST_CASE("slot advance moves only the forward frame", "[traffic]") {
    ScenarioParams p; // v = 25, tau = 0.025 -> shift 1.25 per slot
    TrafficStreams streams = TrafficStreams::from_seed(42);
    RoadState state;
    state.reverse = generate_lane(p.lambda_r, -1200.0, 6000.0,
                                  streams.for_lane(Lane::reverse), Lane::reverse);
    state.forward = generate_lane(p.lambda_f, -1200.0, 6000.0,
                                  streams.for_lane(Lane::forward), Lane::forward);
    const std::vector<double> rev_before = state.reverse.positions;
    const std::vector<double> fwd_base_before = state.forward.positions;

    advance_slot(state, p);
    CHECK(state.slot_index == 1);
    CHECK(state.forward.offset == Catch::Approx(2.0 * p.v * p.tau).epsilon(1e-12));
    CHECK(state.reverse.offset == 0.0);
    CHECK(state.reverse.positions == rev_before);
    CHECK(state.forward.positions == fwd_base_before); // base coords untouched

    advance_slot(state, p);
    ScenarioParams doubled = p;
    doubled.tau = 2.0 * p.tau;
    RoadState once;
    once.forward = state.forward;
    once.forward.offset = 0.0;
    advance_slot(once, doubled);
    CHECK(state.forward.offset == Catch::Approx(once.forward.offset).epsilon(1e-9));
}

TEST_CASE("slot advance tracks the best informed vehicle", "[traffic]") {
    ScenarioParams p;
    RoadState state;
    state.reverse.lane = Lane::reverse;
    state.reverse.positions = {0.0, 300.0};
    state.reverse.informed = {1, 1};
    state.forward.lane = Lane::forward;
    state.forward.positions = {250.0};
    state.forward.informed = {1};
    state.best_informed_reverse = 1;
    state.best_informed_forward = 0;
    advance_slot(state, p);
    CHECK(state.head_position == 300.0);
    CHECK(state.head_lane == Lane::reverse);
    // The forward rider eventually overtakes the parked head.
    for (int i = 0; i < 41; ++i) advance_slot(state, p);
    CHECK(state.head_lane == Lane::forward);
    CHECK(state.head_position > 300.0);
}

TEST_CASE("horizon maintenance extends without rewriting", "[traffic]") {
    ScenarioParams p;
    TrafficStreams streams = TrafficStreams::from_seed(77);
    RoadState state;
    state.reverse = generate_lane(p.lambda_r, -2.0 * p.R, 0.0,
                                  streams.for_lane(Lane::reverse), Lane::reverse);
    state.forward = generate_lane(p.lambda_f, -2.0 * p.R, 0.0,
                                  streams.for_lane(Lane::forward), Lane::forward);
    state.head_position = 0.0;

    ensure_horizon(state, p, streams);
    const std::vector<double> rev_after = state.reverse.positions;
    const std::vector<double> fwd_after = state.forward.positions;
    CHECK(state.reverse.frontier >= 10.0 * p.R);
    CHECK(state.forward.frontier >= state.head_position - state.forward.offset +
                                        10.0 * p.R);

    // Idempotent while the head has not moved.
    ensure_horizon(state, p, streams);
    CHECK(state.reverse.positions == rev_after);
    CHECK(state.forward.positions == fwd_after);

    // Moving the head far ahead appends; the existing prefix is untouched.
    state.head_position = 3.0 * p.R;
    ensure_horizon(state, p, streams);
    CHECK(state.reverse.positions.size() > rev_after.size());
    CHECK(std::equal(rev_after.begin(), rev_after.end(),
                     state.reverse.positions.begin()));
    // Reverse vehicles far behind the head are pruned and marked informed.
    CHECK(state.reverse.live_begin > 0);
    for (std::ptrdiff_t i = 0; i < state.reverse.live_begin; ++i)
        CHECK(state.reverse.informed[static_cast<std::size_t>(i)] == 1);
}

TEST_CASE("lane dump format", "[traffic]") {
    RoadState state;
    state.reverse.lane = Lane::reverse;
    state.reverse.positions = {1.5, 2.0};
    state.reverse.informed = {1, 0};
    state.forward.lane = Lane::forward;
    state.forward.positions = {3.0};
    state.forward.informed = {0};
    state.forward.offset = 0.5;
    std::ostringstream os;
    dump_lanes(state, os);
    CHECK(os.str() == "reverse 1.5 1\nreverse 2 0\nforward 3.5 0\n");
}

TEST_CASE("exponential goodness-of-fit check", "[traffic]") {
    RngStream rng(derive_seed(2024, 3));
    std::vector<double> gaps;
    gaps.reserve(4000);
    for (int i = 0; i < 4000; ++i) gaps.push_back(rng.exponential(0.01));
    CHECK(exponential_ks_pvalue(gaps, 0.01) > 0.01);
    CHECK(exponential_ks_pvalue(gaps, 0.013) < 0.01);
    CHECK_THROWS_AS(exponential_ks_pvalue({}, 0.01), invalid_input);
    CHECK_THROWS_AS(exponential_ks_pvalue({1.0}, 0.0), invalid_input);
}
