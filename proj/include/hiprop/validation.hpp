#ifndef HIPROP_VALIDATION_HPP
#define HIPROP_VALIDATION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hiprop/analytic.hpp"
#include "hiprop/engine.hpp"
#include "hiprop/experiments.hpp"
#include "hiprop/mc_oracles.hpp"
#include "hiprop/params.hpp"
#include "hiprop/rng.hpp"
#include "hiprop/traffic.hpp"

namespace hiprop {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

namespace validation {

inline std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// Random evaluable parameter point with all closed forms well inside double
// range (blocking probability kept far from underflow).
inline ScenarioParams random_params(RngStream& rng) {
    ScenarioParams p;
    p.lambda_r = std::exp(rng.uniform(std::log(1e-4), std::log(0.02)));
    p.lambda_f = std::exp(rng.uniform(std::log(1e-4), std::log(0.02)));
    p.v = rng.uniform(1.0, 80.0);
    p.r = rng.uniform(50.0, 300.0);
    p.R = p.r * rng.uniform(1.5, 4.0);
    p.tau = rng.uniform(0.005, 0.1);
    return p;
}

// Largest relative gap between the closed-form rate and the explicit
// expectation ratio E[D_prop] / (E[T_prop] + E[T_stop]) over random points.
inline double ips_identity_max_rel_error(std::uint64_t seed, int n_points) {
    RngStream rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const ScenarioParams p = random_params(rng);
        const double direct = ips_vmimo(p);
        auto [e_t, e_d] =
            propagate_expectations(p.lambda_r, p.lambda_f, p.v, p.r, p.R, p.tau);
        const double ratio = e_d / (e_t + expected_stop_time(p.lambda_total(), p.v));
        worst = std::max(worst, std::abs(direct - ratio) / ratio);
    }
    return worst;
}

inline CheckResult check_sigma_identities() {
    double worst = 0.0;
    for (double lr : {1e-4, 1e-3, 5e-3, 2e-2})
        for (double lf : {1e-4, 1e-3, 5e-3, 2e-2}) {
            const double pb = blocking_probability(lr + lf, 200.0, 600.0);
            const TransitionProbs t = transition_probabilities(lr, lf, pb);
            worst = std::max(worst, std::abs(t.sigma1 + t.sigma2 - 1.0));
            worst = std::max(worst, std::abs(t.p_f + t.p_r + t.p_b - 1.0));
        }
    return {"sigma-identities", worst <= 1e-12,
            "max |identity residual| = " + num(worst) + " (require <= 1e-12)"};
}

inline CheckResult check_ips_ratio_identity(std::uint64_t seed) {
    const double worst = ips_identity_max_rel_error(seed, 1000);
    return {"ips-ratio-identity", worst <= 1e-9,
            "max relative gap over 1000 random points = " + num(worst) +
                " (require <= 1e-9)"};
}

inline CheckResult check_blocking_monotone() {
    bool ok = true;
    std::string note;
    const double r = 200.0;
    double prev = 2.0;
    for (double lam = 1e-4; lam <= 0.1; lam *= 1.5) {
        const double pb = blocking_probability(lam, r, 600.0);
        if (!(pb < prev)) {
            ok = false;
            note = "not decreasing in lambda at " + num(lam);
        }
        prev = pb;
    }
    prev = 2.0;
    for (double R = 210.0; R <= 1000.0; R += 50.0) {
        const double pb = blocking_probability(0.01, r, R);
        if (!(pb < prev)) {
            ok = false;
            note = "not decreasing in R at " + num(R);
        }
        prev = pb;
    }
    if (note.empty()) note = "strictly decreasing in lambda and in R";
    return {"blocking-monotone", ok, note};
}

inline CheckResult check_gain_at_least_one() {
    double min_gain = 1e300, at = 0.0;
    for (double lam_total : {2e-4, 5e-4, 1e-3, 2e-3, 4e-3, 8e-3, 2e-2, 5e-2}) {
        ScenarioParams p;
        p.lambda_r = lam_total / 2.0;
        p.lambda_f = lam_total / 2.0;
        const double g = ips_vmimo(p) / ips_conventional(p);
        if (g < min_gain) {
            min_gain = g;
            at = lam_total;
        }
    }
    return {"gain-at-least-one", min_gain >= 1.0,
            "min analytic gain over the density grid = " + num(min_gain) +
                " at lambda_total = " + num(at) + " (require >= 1)"};
}

inline CheckResult check_v_monotone_bounded() {
    ScenarioParams p;
    p.lambda_r = 0.003;
    p.lambda_f = 0.003;
    bool ok = true;
    std::string note;
    double prev = -1.0;
    const double bound = asymptotics_report(p).infinite_speed_limit;
    for (double v : {1.0, 2.0, 5.0, 10.0, 20.0, 40.0, 80.0, 160.0, 320.0}) {
        ScenarioParams q = p;
        q.v = v;
        const double ips = ips_vmimo(q);
        if (ips < prev) {
            ok = false;
            note = "decreased at v = " + num(v);
        }
        if (ips > bound) {
            ok = false;
            note = "exceeded the infinite-speed bound at v = " + num(v);
        }
        prev = ips;
    }
    if (note.empty())
        note = "nondecreasing in v and below the infinite-speed bound " +
               num(bound) + " m/s";
    return {"v-monotone-bounded", ok, note};
}

inline CheckResult check_ips_ceilings() {
    bool ok = true;
    std::string note;
    for (double lam_total : {1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.3}) {
        ScenarioParams p;
        p.lambda_r = lam_total / 2.0;
        p.lambda_f = lam_total / 2.0;
        const double vm = ips_vmimo(p);
        const double cv = ips_conventional(p);
        if (!(vm < p.R / p.tau)) {
            ok = false;
            note = "combined-scheme ceiling violated at lambda_total = " +
                   num(lam_total);
        }
        if (!(cv < p.r / p.tau)) {
            ok = false;
            note = "single-link ceiling violated at lambda_total = " +
                   num(lam_total);
        }
    }
    if (note.empty()) note = "ips_vmimo < R/tau and ips_conventional < r/tau";
    return {"ips-ceilings", ok, note};
}

inline CheckResult check_low_density_cubic_fit() {
    const CubicFit fit = low_density_cubic_fit(ScenarioParams{}, 1e-4, 1e-3, 10);
    return {"low-density-cubic-fit", fit.r_squared >= 0.95,
            "R^2 of (ips - v) against lambda_total^3 over [1e-4, 1e-3] = " +
                num(fit.r_squared) + " (require >= 0.95)"};
}

inline CheckResult check_mc_blocking_agreement(std::uint64_t seed,
                                               long long samples) {
    bool ok = true;
    std::string note = "relative errors:";
    for (double lam : {0.005, 0.01, 0.02}) { // lambda*(R-r) = 2, 4, 8
        const double closed = blocking_probability(lam, 200.0, 600.0);
        const McEstimate mc =
            mc_blocking_probability(lam, 200.0, 600.0, samples, derive_seed(seed, 8, static_cast<std::uint64_t>(lam * 1e6)));
        const double rel = (mc.estimate - closed) / closed;
        note += " lambda=" + num(lam) + ": " + num(rel * 100.0) + "%";
        if (std::abs(rel) > 0.15) ok = false;
    }
    note += " (require |rel| <= 15%)";
    return {"mc-blocking-agreement", ok, note};
}

inline CheckResult check_mc_hop_agreement(std::uint64_t seed, long long samples) {
    bool ok = true;
    std::string note = "relative errors:";
    for (double lam : {0.005, 0.01, 0.02}) {
        const double closed = expected_max_hop(lam, 200.0, 600.0);
        const McEstimate mc = mc_expected_max_hop(
            lam, 200.0, 600.0, samples, derive_seed(seed, 9, static_cast<std::uint64_t>(lam * 1e6)));
        const double rel = (mc.estimate - closed) / closed;
        note += " lambda=" + num(lam) + ": " + num(rel * 100.0) + "%";
        if (std::abs(rel) > 0.20) ok = false;
    }
    note += " (require |rel| <= 20%)";
    return {"mc-hop-agreement", ok, note};
}

inline CheckResult check_lane_stationarity(std::uint64_t seed) {
    // One-shot lane.
    RngStream rng(derive_seed(seed, 10));
    const double lam = 0.01;
    LaneSnapshot lane = generate_lane(lam, 0.0, 2.0e6, rng);
    std::vector<double> gaps;
    for (std::size_t i = 1; i < lane.positions.size(); ++i)
        gaps.push_back(lane.positions[i] - lane.positions[i - 1]);
    const double p1 = exponential_ks_pvalue(gaps, lam);

    // A lane assembled by many lazy extensions must look the same.
    RoadState state;
    TrafficStreams streams = TrafficStreams::from_seed(derive_seed(seed, 11));
    ScenarioParams p;
    p.lambda_r = lam;
    p.lambda_f = lam;
    for (int k = 0; k < 400; ++k) {
        state.head_position += 500.0;
        ensure_horizon(state, p, streams, -1.0, -1.0, false);
    }
    gaps.clear();
    for (std::ptrdiff_t i = 1; i < state.reverse.size(); ++i)
        gaps.push_back(state.reverse.positions[static_cast<std::size_t>(i)] -
                       state.reverse.positions[static_cast<std::size_t>(i - 1)]);
    const double p2 = exponential_ks_pvalue(gaps, lam);

    const bool ok = p1 > 0.01 && p2 > 0.01;
    return {"lane-stationarity-ks", ok,
            "KS p-values: one-shot " + num(p1) + ", incremental " + num(p2) +
                " (require > 0.01)"};
}

// Same decode physics stepped in two reference frames over one shared
// population; per-lane offsets make relative distances bit-identical, so the
// sequence of (lane, index) head identities must match exactly.
inline CheckResult check_frame_equivalence(std::uint64_t seed) {
    RngStream rng(derive_seed(seed, 12));
    const ScenarioParams p{0.008, 0.008, 25.0, 200.0, 600.0, 0.025};
    std::vector<double> rev, fwd;
    {
        double x = -2000.0;
        for (;;) {
            x += rng.exponential(p.lambda_r);
            if (x > 8000.0) break;
            rev.push_back(x);
        }
        x = -2000.0;
        for (;;) {
            x += rng.exponential(p.lambda_f);
            if (x > 8000.0) break;
            fwd.push_back(x);
        }
        rev.push_back(0.0);
        std::sort(rev.begin(), rev.end());
    }
    const std::size_t source =
        static_cast<std::size_t>(std::lower_bound(rev.begin(), rev.end(), 0.0) -
                                 rev.begin());

    // Single-pass combined-decode stepper over the full uninformed set, with
    // per-lane velocities expressed through lane offsets.
    const auto run = [&](double rev_vel, double fwd_vel) {
        std::vector<char> inf_r(rev.size(), 0), inf_f(fwd.size(), 0);
        inf_r[source] = 1;
        double off_r = 0.0, off_f = 0.0;
        const double thr = 1.0 / (p.r * p.r);
        std::vector<std::pair<int, std::size_t>> heads;
        for (int slot = 0; slot < 400; ++slot) {
            std::vector<std::size_t> new_r, new_f;
            const auto stat_at = [&](double x) {
                double s = 0.0;
                for (std::size_t i = 0; i < rev.size(); ++i)
                    if (inf_r[i]) {
                        const double d = x - (rev[i] + off_r);
                        if (std::abs(d) <= p.R) s += 1.0 / (d * d);
                    }
                for (std::size_t i = 0; i < fwd.size(); ++i)
                    if (inf_f[i]) {
                        const double d = x - (fwd[i] + off_f);
                        if (std::abs(d) <= p.R) s += 1.0 / (d * d);
                    }
                return s;
            };
            for (std::size_t i = 0; i < rev.size(); ++i)
                if (!inf_r[i] && stat_at(rev[i] + off_r) >= thr) new_r.push_back(i);
            for (std::size_t i = 0; i < fwd.size(); ++i)
                if (!inf_f[i] && stat_at(fwd[i] + off_f) >= thr) new_f.push_back(i);
            for (std::size_t i : new_r) inf_r[i] = 1;
            for (std::size_t i : new_f) inf_f[i] = 1;
            off_r += rev_vel * p.tau;
            off_f += fwd_vel * p.tau;
            int head_lane = 0;
            std::size_t head_idx = 0;
            double best = -1e300;
            for (std::size_t i = 0; i < rev.size(); ++i)
                if (inf_r[i] && rev[i] + off_r > best) {
                    best = rev[i] + off_r;
                    head_lane = 0;
                    head_idx = i;
                }
            for (std::size_t i = 0; i < fwd.size(); ++i)
                if (inf_f[i] && fwd[i] + off_f > best) {
                    best = fwd[i] + off_f;
                    head_lane = 1;
                    head_idx = i;
                }
            heads.emplace_back(head_lane, head_idx);
        }
        return heads;
    };

    const auto relative = run(0.0, 2.0 * p.v);       // reverse-lane frame
    const auto ground = run(-p.v, p.v);              // ground frame
    long long mismatches = 0;
    for (std::size_t i = 0; i < relative.size(); ++i)
        if (relative[i] != ground[i]) ++mismatches;
    return {"frame-equivalence", mismatches == 0,
            "head identity mismatches over 400 slots = " +
                std::to_string(mismatches) + " (require 0)"};
}

inline CheckResult check_engine_monotonicity(std::uint64_t seed) {
    bool ok = true;
    std::string note;
    for (const SchemeKind scheme :
         {SchemeKind::vmimo(), SchemeKind::flooding(),
          SchemeKind::reverse_aided(2)}) {
        for (int k = 0; k < 3 && ok; ++k) {
            const ScenarioParams p{0.004, 0.004, 25.0, 200.0, 600.0, 0.025};
            TrafficStreams streams =
                TrafficStreams::from_seed(derive_seed(seed, 13, static_cast<std::uint64_t>(k)));
            Budget budget{800, 0};
            RoadState state = detail::initial_road(p, budget, streams);
            ensure_horizon(state, p, streams);
            const double hop_cap =
                (scheme.kind == SchemeId::vmimo ? p.R : p.r) + 2.0 * p.v * p.tau;
            long long informed_prev = 0;
            for (int slot = 0; slot < 800 && ok; ++slot) {
                const SlotRecord rec = step_slot(state, p, scheme, streams);
                if (rec.head_after < rec.head_before) {
                    ok = false;
                    note = "head decreased at slot " + std::to_string(slot);
                }
                if (rec.head_after - rec.head_before > hop_cap + 1e-9) {
                    ok = false;
                    note = "hop bound exceeded at slot " + std::to_string(slot) +
                           ": " + num(rec.head_after - rec.head_before);
                }
                long long informed_now = 0;
                for (const LaneSnapshot* lane : {&state.reverse, &state.forward})
                    for (char f : lane->informed) informed_now += f ? 1 : 0;
                if (informed_now < informed_prev) {
                    ok = false;
                    note = "informed count decreased at slot " + std::to_string(slot);
                }
                informed_prev = informed_now;
            }
        }
    }
    if (note.empty())
        note = "head monotone, informed set monotone, per-slot hop bounded";
    return {"engine-monotonicity", ok, note};
}

struct RenewalDiag {
    double density_half;
    double mean_prop1_run;
    double expected_prop1_run; // 1/p_b
    double mean_stop_s;
    double stop_bound_s; // 1/(2 v lambda) + tau
    long long stop_to_prop1;
    long long stop_to_prop2;
    long long prop2_to_prop2;
};

inline RenewalDiag renewal_diag(double lambda_half, std::uint64_t seed) {
    ScenarioParams p;
    p.lambda_r = lambda_half;
    p.lambda_f = lambda_half;
    const ReplicationResult rep =
        run_scenario(p, SchemeKind::vmimo(), Budget{12000, 0}, seed);
    RenewalDiag d;
    d.density_half = lambda_half;
    d.mean_prop1_run = rep.mean_prop1_run_slots;
    d.expected_prop1_run = 1.0 / blocking_probability(p.lambda_total(), p.r, p.R);
    d.mean_stop_s = rep.mean_stop_run_slots * p.tau;
    d.stop_bound_s = 1.0 / (2.0 * p.v * p.lambda_total()) + p.tau;
    d.stop_to_prop1 = rep.transitions[2][0];
    d.stop_to_prop2 = rep.transitions[2][1];
    d.prop2_to_prop2 = rep.transitions[1][1];
    return d;
}

inline CheckResult check_renewal_automaton(const std::vector<RenewalDiag>& diags) {
    bool ok = true;
    std::string note = "STOP->PROP_I / STOP->PROP_II counts:";
    for (const auto& d : diags) {
        note += " lambda_half=" + num(d.density_half) + ": " +
                std::to_string(d.stop_to_prop1) + "/" +
                std::to_string(d.stop_to_prop2);
        if (d.stop_to_prop1 != 0) ok = false;
        if (d.prop2_to_prop2 != 0) ok = false;
    }
    note += " (automaton requires STOP->PROP_II only and no PROP_II self-loop)";
    return {"renewal-automaton", ok, note};
}

inline CheckResult check_prop1_run_length(const std::vector<RenewalDiag>& diags) {
    bool ok = true;
    std::string note = "mean consecutive decode-slots vs 1/p_b:";
    for (const auto& d : diags) {
        const double rel =
            (d.mean_prop1_run - d.expected_prop1_run) / d.expected_prop1_run;
        note += " lambda_half=" + num(d.density_half) + ": " +
                num(d.mean_prop1_run) + " vs " + num(d.expected_prop1_run) + " (" +
                num(rel * 100.0) + "%)";
        if (std::abs(rel) > 0.15) ok = false;
    }
    note += " (require |rel| <= 15%)";
    return {"prop1-run-length", ok, note};
}

inline CheckResult check_stop_duration_bound(const std::vector<RenewalDiag>& diags) {
    bool ok = true;
    std::string note = "mean stop duration vs worst-case bound:";
    for (const auto& d : diags) {
        note += " lambda_half=" + num(d.density_half) + ": " + num(d.mean_stop_s) +
                "s vs " + num(d.stop_bound_s) + "s";
        if (d.mean_stop_s > d.stop_bound_s) ok = false;
    }
    note += " (require mean <= bound)";
    return {"stop-duration-bound", ok, note};
}

inline CheckResult check_coupled_dominance(std::uint64_t seed) {
    long long violations = 0, slots = 0;
    for (int k = 0; k < 2; ++k) {
        ScenarioParams p;
        p.lambda_r = k == 0 ? 0.005 : 0.01;
        p.lambda_f = p.lambda_r;
        const DominanceReport rep =
            coupled_dominance_run(p, Budget{1500, 0}, derive_seed(seed, 14, static_cast<std::uint64_t>(k)));
        violations += rep.violations;
        slots += rep.slots;
    }
    return {"coupled-dominance", violations == 0,
            std::to_string(violations) + " containment violations over " +
                std::to_string(slots) + " coupled slots (require 0)"};
}

inline CheckResult check_estimate_ips_permutation() {
    std::vector<double> a{1211.25, 980.5, 1103.0, 1407.75, 995.125, 1288.0625};
    std::vector<double> b{1288.0625, 995.125, 1407.75, 980.5, 1103.0, 1211.25};
    const IpsEstimate ea = estimate_ips(a);
    const IpsEstimate eb = estimate_ips(b);
    const bool ok = ea.mean == eb.mean && ea.ci95_halfwidth == eb.ci95_halfwidth;
    return {"estimate-ips-permutation", ok,
            ok ? "bit-identical under input permutation"
               : "permutation changed the estimate"};
}

inline SweepSpec small_sweep_spec(std::uint64_t seed) {
    SweepSpec spec;
    spec.varying = SweepParam::lambda_total_symmetric;
    spec.values = {0.004, 0.01};
    spec.schemes = {SchemeKind::vmimo(), SchemeKind::flooding()};
    spec.replications = 3;
    spec.budget = Budget{2500, 0};
    spec.base_seed = seed;
    return spec;
}

inline CheckResult check_sweep_determinism(std::uint64_t seed) {
    const SweepSpec spec = small_sweep_spec(seed);
    std::ostringstream a, b;
    emit_csv(run_sweep(spec), a);
    SweepSpec spec2 = spec;
    spec2.workers = 1; // scheduling must not matter
    emit_csv(run_sweep(spec2), b);
    const bool ok = a.str() == b.str();
    return {"sweep-determinism", ok,
            ok ? "byte-identical CSV across reruns and worker counts"
               : "CSV differed between reruns"};
}

inline CheckResult check_sweep_subset_reproducibility(std::uint64_t seed) {
    const SweepSpec spec = small_sweep_spec(seed);
    const std::vector<SweepRow> rows = run_sweep(spec);
    // Recompute one cell in isolation: value index 1, vmimo, all replications.
    const ScenarioParams p = substitute(spec.fixed, spec.varying, spec.values[1]);
    std::vector<double> values;
    for (long long k = 0; k < spec.replications; ++k) {
        const std::uint64_t s =
            sweep_replication_seed(spec.base_seed, 1, SchemeKind::vmimo(), k);
        values.push_back(run_scenario(p, SchemeKind::vmimo(), spec.budget, s)
                             .estimate.mean);
    }
    const IpsEstimate est = estimate_ips(values);
    const SweepRow* row = nullptr;
    for (const auto& r : rows)
        if (r.scheme.kind == SchemeId::vmimo && r.params == p) row = &r;
    const bool ok = row && row->ips_sim_mean == est.mean &&
                    row->ips_sim_ci95 == est.ci95_halfwidth;
    return {"sweep-subset-reproducibility", ok,
            ok ? "isolated recomputation reproduced the sweep cell bit-exactly"
               : "isolated recomputation diverged from the sweep cell"};
}

inline CheckResult check_sweep_monotone_density(std::uint64_t seed) {
    // Densities far enough apart that the expected ordering dwarfs the
    // replication noise: near the sparse carry floor the rate sits around
    // 2v regardless of density, so neighbouring sparse points would only
    // compare noise against noise.
    SweepSpec spec;
    spec.varying = SweepParam::lambda_total_symmetric;
    spec.values = {0.002, 0.008, 0.02};
    spec.schemes = {SchemeKind::vmimo()};
    spec.replications = 8;
    spec.budget = Budget{6000, 0};
    spec.base_seed = derive_seed(seed, 15);
    const std::vector<SweepRow> rows = run_sweep(spec);
    bool ok = rows.size() == 3;
    std::string note = "simulated means:";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        note += " " + num(rows[i].ips_sim_mean);
        if (i > 0 && !(rows[i].ips_sim_mean > rows[i - 1].ips_sim_mean)) ok = false;
    }
    note += " (require strictly increasing over lambda_total {0.002, 0.008, 0.02})";
    return {"sweep-monotone-density", ok, note};
}

inline CheckResult check_sim_vs_analytic(std::uint64_t seed) {
    SweepSpec spec;
    spec.varying = SweepParam::lambda_total_symmetric;
    spec.values = {0.004, 0.006, 0.01, 0.02};
    spec.schemes = {SchemeKind::vmimo(), SchemeKind::flooding()};
    spec.replications = 6;
    spec.budget = Budget{6000, 0};
    spec.base_seed = derive_seed(seed, 16);
    const std::vector<SweepRow> rows = run_sweep(spec);
    bool ok = true;
    double worst = 0.0;
    std::string note = "relative errors:";
    for (const auto& row : rows) {
        if (row.failed || !row.ips_analytic) {
            ok = false;
            continue;
        }
        const double rel =
            (row.ips_sim_mean - *row.ips_analytic) / *row.ips_analytic;
        worst = std::max(worst, std::abs(rel));
        note += " " + std::string(scheme_name(row.scheme)) +
                "@lambda_total=" + num(row.params.lambda_total()) + ": " +
                num(rel * 100.0) + "%";
        if (std::abs(rel) > 0.20) ok = false;
    }
    note += " (require |rel| <= 20%)";
    return {"sim-vs-analytic-20pct", ok, note};
}

} // namespace validation

// The full cross-module property suite, deterministic per seed. Some checks
// encode model-level expectations that the measured system does not meet;
// they are reported as failures with the measured numbers rather than being
// weakened (see README).
inline std::vector<CheckResult> run_validation_suite(std::uint64_t seed = 20260801,
                                                     long long mc_samples = 200000,
                                                     long long mc_hop_samples = 20000) {
    using namespace validation;
    std::vector<CheckResult> out;
    out.push_back(check_sigma_identities());
    out.push_back(check_ips_ratio_identity(derive_seed(seed, 1)));
    out.push_back(check_blocking_monotone());
    out.push_back(check_gain_at_least_one());
    out.push_back(check_v_monotone_bounded());
    out.push_back(check_ips_ceilings());
    out.push_back(check_low_density_cubic_fit());
    out.push_back(check_mc_blocking_agreement(seed, mc_samples));
    out.push_back(check_mc_hop_agreement(seed, mc_hop_samples));
    out.push_back(check_lane_stationarity(seed));
    out.push_back(check_frame_equivalence(seed));
    out.push_back(check_engine_monotonicity(seed));
    std::vector<RenewalDiag> diags;
    diags.push_back(renewal_diag(0.003, derive_seed(seed, 20)));
    diags.push_back(renewal_diag(0.005, derive_seed(seed, 21)));
    out.push_back(check_renewal_automaton(diags));
    out.push_back(check_prop1_run_length(diags));
    out.push_back(check_stop_duration_bound(diags));
    out.push_back(check_coupled_dominance(seed));
    out.push_back(check_estimate_ips_permutation());
    out.push_back(check_sweep_determinism(derive_seed(seed, 17)));
    out.push_back(check_sweep_subset_reproducibility(derive_seed(seed, 18)));
    out.push_back(check_sweep_monotone_density(seed));
    out.push_back(check_sim_vs_analytic(seed));
    return out;
}

} // namespace hiprop

#endif // HIPROP_VALIDATION_HPP
