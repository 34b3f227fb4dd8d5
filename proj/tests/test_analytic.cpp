#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hiprop/analytic.hpp"
#include "hiprop/validation.hpp"

using namespace hiprop;

namespace {
const ScenarioParams kDefaults{}; // lambda_r = lambda_f = 0.005, v = 25,
                                  // r = 200, R = 600, tau = 0.025
}

TEST_CASE("standard normal CDF reference points", "[analytic]") {
    CHECK(normal_cdf(0.0) == Catch::Approx(0.5).margin(1e-15));
    CHECK(normal_cdf(-1.959963984540054) == Catch::Approx(0.025).margin(1e-9));
    CHECK(normal_cdf(5.0) == Catch::Approx(1.0 - 2.8665157187919333e-7).margin(1e-12));
    CHECK(normal_cdf(-40.0) >= 0.0);
}

TEST_CASE("blocking probability at the default density", "[analytic]") {
    // Independently derived: exp(-lambda r) * Phi((1/r^2 - mu)/sigma) with
    // mu = lambda(1/r - 1/R), sigma^2 = lambda/3 (1/r^3 - 1/R^3).
    CHECK(blocking_probability(0.01, 200.0, 600.0) ==
          Catch::Approx(0.0458374921544).epsilon(1e-9));
    CHECK(blocking_probability(0.02, 200.0, 600.0) ==
          Catch::Approx(1.0 / 772.7).epsilon(2e-4));
}

TEST_CASE("blocking probability validates geometry", "[analytic]") {
    CHECK_THROWS_AS(blocking_probability(0.0, 200.0, 600.0), invalid_input);
    CHECK_THROWS_AS(blocking_probability(0.01, -1.0, 600.0), invalid_input);
    CHECK_THROWS_AS(blocking_probability(0.01, 200.0, 200.0), invalid_input);
}

TEST_CASE("transition split at the default point", "[analytic]") {
    const double pb = blocking_probability(0.01, 200.0, 600.0);
    const TransitionProbs t = transition_probabilities(0.005, 0.005, pb);
    CHECK(t.sigma1 == Catch::Approx(0.477081253923).epsilon(1e-9));
    CHECK(t.sigma2 / t.sigma1 == Catch::Approx(1.09607900494).epsilon(1e-9));
    CHECK(t.sigma1 + t.sigma2 == Catch::Approx(1.0).margin(1e-15));
    CHECK(t.p_f + t.p_r + t.p_b == Catch::Approx(1.0).margin(1e-15));
    // No reverse traffic: the stop state is unreachable but the split itself
    // is still well defined.
    const TransitionProbs t0 = transition_probabilities(0.0, 0.01, pb);
    CHECK(t0.sigma1 == 0.0);
    CHECK(t0.sigma2 == 1.0);
    CHECK_THROWS_AS(transition_probabilities(0.0, 0.0, pb), invalid_input);
    CHECK_THROWS_AS(transition_probabilities(0.005, 0.005, 1.5), invalid_input);
}

TEST_CASE("stop and carry expectations", "[analytic]") {
    CHECK(expected_stop_time(0.01, 25.0) == Catch::Approx(2.0).epsilon(1e-12));
    auto [t2, d2] = prop2_expectations(0.01, 25.0);
    CHECK(t2 == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(d2 == Catch::Approx(100.0).epsilon(1e-12));
    CHECK_THROWS_AS(expected_stop_time(0.01, 0.0), invalid_input);
}

TEST_CASE("expected one-slot hop", "[analytic]") {
    CHECK(expected_max_hop(0.01, 200.0, 600.0) == Catch::Approx(240.0).epsilon(1e-12));
    // Harmonic blend: below the detection ceiling everywhere, near the
    // sparse-limit lambda r^2 when traffic thins out.
    CHECK(expected_max_hop(10.0, 200.0, 600.0) < 600.0);
    CHECK(expected_max_hop(1e-6, 200.0, 600.0) ==
          Catch::Approx(1e-6 * 4e4).epsilon(1e-3));
}

TEST_CASE("hop-phase expectations at the default point", "[analytic]") {
    auto [e_t, e_d] = propagate_expectations(0.005, 0.005, 25.0, 200.0, 600.0, 0.025);
    CHECK(e_t == Catch::Approx(3.05016756982).epsilon(1e-9));
    CHECK(e_d == Catch::Approx(8346.49967582).epsilon(1e-9));
}

TEST_CASE("long-run rates at the default point", "[analytic]") {
    CHECK(ips_vmimo(kDefaults) == Catch::Approx(1652.71737233).epsilon(1e-9));
    CHECK(ips_conventional(kDefaults) == Catch::Approx(547.769031617).epsilon(1e-9));
    const AnalyticReport rep = analytic_report(kDefaults);
    CHECK(rep.gain == Catch::Approx(3.01717927984).epsilon(1e-9));
    CHECK(rep.expectations.e_t_stop == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(rep.expectations.e_d_mprop == Catch::Approx(240.0).epsilon(1e-12));
}

TEST_CASE("rate equals the expectation ratio", "[analytic]") {
    CHECK(validation::ips_identity_max_rel_error(987654321ULL, 1000) <= 1e-9);
    // Either side of the dense-regime evaluation switch.
    for (double lam_total : {0.079, 0.081}) {
        ScenarioParams p;
        p.lambda_r = lam_total / 2.0;
        p.lambda_f = lam_total / 2.0;
        auto [e_t, e_d] =
            propagate_expectations(p.lambda_r, p.lambda_f, p.v, p.r, p.R, p.tau);
        const double ratio = e_d / (e_t + expected_stop_time(lam_total, p.v));
        CHECK(ips_vmimo(p) == Catch::Approx(ratio).epsilon(1e-9));
    }
}

TEST_CASE("dense traffic stays finite and near the hop ceiling", "[analytic]") {
    ScenarioParams p;
    p.lambda_r = 0.1;
    p.lambda_f = 0.1; // blocking underflows well past the switch point
    const double ips = ips_vmimo(p);
    const double hop_rate = expected_max_hop(0.2, p.r, p.R) / p.tau;
    CHECK(std::isfinite(ips));
    CHECK(ips >= hop_rate * (1.0 - 1e-9));
    CHECK(ips < p.R / p.tau);
    CHECK(ips == Catch::Approx(hop_rate).epsilon(1e-3));
}

TEST_CASE("sparse and dense reference points", "[analytic]") {
    const auto at = [](double lambda_half) {
        ScenarioParams p;
        p.lambda_r = lambda_half;
        p.lambda_f = lambda_half;
        return p;
    };
    CHECK(ips_vmimo(at(1e-5)) == Catch::Approx(49.8998).epsilon(1e-5));
    CHECK(ips_vmimo(at(5e-5)) == Catch::Approx(49.5188).epsilon(1e-5));
    CHECK(ips_vmimo(at(1e-4)) == Catch::Approx(49.0878).epsilon(1e-5));
    CHECK(ips_vmimo(at(1e-3)) == Catch::Approx(50.4729).epsilon(1e-5));
    CHECK(ips_vmimo(at(0.025)) == Catch::Approx(18461.525).epsilon(1e-6));
    CHECK(ips_conventional(at(0.025)) == Catch::Approx(7992.2834).epsilon(1e-6));
    CHECK(ips_vmimo(at(0.05)) == Catch::Approx(20869.565).epsilon(1e-6));
    CHECK(ips_conventional(at(0.05)) == Catch::Approx(7999.9998).epsilon(1e-6));
    CHECK(ips_vmimo(at(0.05)) / ips_conventional(at(0.05)) ==
          Catch::Approx(2.6087).epsilon(1e-4));
}

TEST_CASE("gain profile across the density sweep", "[analytic]") {
    const auto gain_at = [](double lambda_total) {
        ScenarioParams p;
        p.lambda_r = lambda_total / 2.0;
        p.lambda_f = lambda_total / 2.0;
        return ips_vmimo(p) / ips_conventional(p);
    };
    CHECK(gain_at(0.004) == Catch::Approx(0.816273).epsilon(1e-5));
    CHECK(gain_at(0.006) == Catch::Approx(1.25545).epsilon(1e-5));
    CHECK(gain_at(0.01) == Catch::Approx(3.01718).epsilon(1e-5));
    CHECK(gain_at(0.02) == Catch::Approx(3.16044).epsilon(1e-5));
}

TEST_CASE("speed dependence at a fixed density", "[analytic]") {
    ScenarioParams p;
    p.lambda_r = 0.003;
    p.lambda_f = 0.003;
    const double expected[] = {47.0348, 93.5087, 184.814, 361.117, 690.441};
    const double speeds[] = {5.0, 10.0, 20.0, 40.0, 80.0};
    for (int i = 0; i < 5; ++i) {
        ScenarioParams q = p;
        q.v = speeds[i];
        CHECK(ips_vmimo(q) == Catch::Approx(expected[i]).epsilon(1e-5));
    }
    CHECK(asymptotics_report(p).infinite_speed_limit ==
          Catch::Approx(7842.13).epsilon(1e-5));
}

TEST_CASE("asymptotics report fields", "[analytic]") {
    const AsymptoticsReport rep = asymptotics_report(kDefaults);
    CHECK(rep.low_density_limit == 25.0);
    CHECK(rep.high_density_approx == Catch::Approx(9600.0).epsilon(1e-12));
    CHECK(rep.high_density_limit == Catch::Approx(24000.0).epsilon(1e-12));
    CHECK(rep.zero_speed_limit == 0.0);
    CHECK(rep.gain_high_density_approx == Catch::Approx(1.2).epsilon(1e-12));
    CHECK(rep.gain_limit == Catch::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("cubic shape fit over the sparse band", "[analytic]") {
    const CubicFit fit = low_density_cubic_fit(kDefaults, 1e-4, 1e-3, 10);
    // The fit quality is itself a measured quantity; freeze the band so a
    // formula regression cannot slip through unnoticed.
    CHECK(fit.r_squared > 0.61);
    CHECK(fit.r_squared < 0.63);
    CHECK(std::isfinite(fit.slope));
    CHECK_THROWS_AS(low_density_cubic_fit(kDefaults, 1e-3, 1e-4, 10), invalid_input);
    CHECK_THROWS_AS(low_density_cubic_fit(kDefaults, 1e-4, 1e-3, 2), invalid_input);
}

TEST_CASE("no reverse-lane traffic is a degenerate model", "[analytic]") {
    ScenarioParams p;
    p.lambda_r = 0.0;
    p.lambda_f = 0.01;
    CHECK_THROWS_AS(ips_vmimo(p), degenerate_model);
    CHECK_THROWS_AS(ips_conventional(p), degenerate_model);
    CHECK_THROWS_AS(propagate_expectations(0.0, 0.01, 25.0, 200.0, 600.0, 0.025),
                    degenerate_model);
    CHECK_THROWS_AS(analytic_report(p), degenerate_model);
    CHECK_THROWS_AS(asymptotics_report(p), degenerate_model);
}

TEST_CASE("parameter validation precedes evaluation", "[analytic]") {
    ScenarioParams p;
    p.R = 100.0; // < r
    CHECK_THROWS_AS(ips_vmimo(p), invalid_input);
    ScenarioParams q;
    q.v = 0.0;
    CHECK_THROWS_AS(ips_vmimo(q), invalid_input);
}
