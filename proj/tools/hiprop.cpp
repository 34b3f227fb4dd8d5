// Command-line frontend: analytic evaluation, single simulations, parameter
// sweeps, scheme comparisons, and the cross-module validation suite.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hiprop/hiprop.hpp"

namespace {

using namespace hiprop;

struct CommonFlags {
    ScenarioParams params;
    std::uint64_t seed = 1;
};

void add_param_flags(CLI::App* cmd, ScenarioParams& p) {
    cmd->add_option("--lambda-r", p.lambda_r,
                    "Reverse (westbound) lane density, vehicles/m")
        ->capture_default_str();
    cmd->add_option("--lambda-f", p.lambda_f,
                    "Forward (eastbound) lane density, vehicles/m")
        ->capture_default_str();
    cmd->add_option("--v", p.v, "Vehicle speed, m/s")->capture_default_str();
    cmd->add_option("--r", p.r, "Transmission (decode) range, m")
        ->capture_default_str();
    cmd->add_option("--R", p.R, "Detection (combining) range, m")
        ->capture_default_str();
    cmd->add_option("--tau", p.tau, "Slot duration, s")->capture_default_str();
}

SchemeKind parse_scheme(const std::string& name, int handshake) {
    if (name == "vmimo") return SchemeKind::vmimo();
    if (name == "flooding") return SchemeKind::flooding();
    if (name == "reverse_aided") return SchemeKind::reverse_aided(handshake);
    throw invalid_input("unknown scheme: " + name +
                        " (expected vmimo, flooding, or reverse_aided)");
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

int cmd_analytic(const ScenarioParams& p, const std::string& csv_path) {
    require_evaluable(p);
    const AnalyticReport rep = analytic_report(p);
    const AsymptoticsReport asym = asymptotics_report(p);
    std::printf("parameters            lambda_r=%s lambda_f=%s v=%s r=%s R=%s tau=%s\n",
                fmt(p.lambda_r).c_str(), fmt(p.lambda_f).c_str(), fmt(p.v).c_str(),
                fmt(p.r).c_str(), fmt(p.R).c_str(), fmt(p.tau).c_str());
    std::printf("p_b                   %s\n", fmt(rep.transition.p_b).c_str());
    std::printf("p_f / p_r             %s / %s\n", fmt(rep.transition.p_f).c_str(),
                fmt(rep.transition.p_r).c_str());
    std::printf("sigma1 / sigma2       %s / %s\n", fmt(rep.transition.sigma1).c_str(),
                fmt(rep.transition.sigma2).c_str());
    std::printf("E[T_stop]             %s s\n", fmt(rep.expectations.e_t_stop).c_str());
    std::printf("E[T_prop2] / E[D_prop2]  %s s / %s m\n",
                fmt(rep.expectations.e_t_prop2).c_str(),
                fmt(rep.expectations.e_d_prop2).c_str());
    std::printf("E[max hop]            %s m\n", fmt(rep.expectations.e_d_mprop).c_str());
    std::printf("E[T_prop] / E[D_prop] %s s / %s m\n",
                fmt(rep.expectations.e_t_prop).c_str(),
                fmt(rep.expectations.e_d_prop).c_str());
    std::printf("ips_vmimo             %s m/s\n", fmt(rep.ips_vmimo).c_str());
    std::printf("ips_conventional      %s m/s\n", fmt(rep.ips_conventional).c_str());
    std::printf("gain                  %s\n", fmt(rep.gain).c_str());
    std::printf("high-density approx   %s m/s (ceiling %s m/s)\n",
                fmt(asym.high_density_approx).c_str(),
                fmt(asym.high_density_limit).c_str());
    std::printf("infinite-speed bound  %s m/s\n",
                fmt(asym.infinite_speed_limit).c_str());
    std::printf("gain high-density     %s (limit %s)\n",
                fmt(asym.gain_high_density_approx).c_str(),
                fmt(asym.gain_limit).c_str());
    if (!csv_path.empty()) {
        std::ofstream os(csv_path, std::ios::binary);
        if (!os) throw io_failure("cannot open for writing: " + csv_path);
        os << "lambda_r,lambda_f,v,r,R,tau,p_b,sigma1,sigma2,e_t_stop,e_t_prop,"
              "e_d_prop,e_d_mprop,ips_vmimo,ips_conventional,gain\n";
        os << fmt(p.lambda_r) << ',' << fmt(p.lambda_f) << ',' << fmt(p.v) << ','
           << fmt(p.r) << ',' << fmt(p.R) << ',' << fmt(p.tau) << ','
           << fmt(rep.transition.p_b) << ',' << fmt(rep.transition.sigma1) << ','
           << fmt(rep.transition.sigma2) << ',' << fmt(rep.expectations.e_t_stop)
           << ',' << fmt(rep.expectations.e_t_prop) << ','
           << fmt(rep.expectations.e_d_prop) << ','
           << fmt(rep.expectations.e_d_mprop) << ',' << fmt(rep.ips_vmimo) << ','
           << fmt(rep.ips_conventional) << ',' << fmt(rep.gain) << '\n';
        if (!os) throw io_failure("write failed: " + csv_path);
    }
    return 0;
}

int cmd_simulate(const ScenarioParams& p, const SchemeKind& scheme,
                 long long replications, const Budget& budget, std::uint64_t seed,
                 const std::string& trace_path) {
    require_evaluable(p);
    if (replications < 1) throw invalid_input("requires replications >= 1");
    std::ofstream trace;
    std::vector<double> values;
    for (long long k = 0; k < replications; ++k) {
        EngineOptions opt;
        if (k == 0 && !trace_path.empty()) {
            trace.open(trace_path, std::ios::binary);
            if (!trace) throw io_failure("cannot open for writing: " + trace_path);
            opt.trace = &trace;
        }
        const ReplicationResult rep =
            run_scenario(p, scheme, budget, derive_seed(seed, 100, static_cast<std::uint64_t>(k)), opt);
        values.push_back(rep.estimate.mean);
        if (opt.trace) trace.close();
    }
    IpsEstimate est;
    if (values.size() >= 2) {
        est = estimate_ips(values, budget.max_slots, 0);
    } else {
        est.mean = values[0];
        est.replications = 1;
    }
    std::printf("scheme          %s\n", scheme_name(scheme));
    std::printf("ips_mean        %s m/s\n", fmt(est.mean).c_str());
    std::printf("ci95_halfwidth  %s m/s\n", fmt(est.ci95_halfwidth).c_str());
    std::printf("replications    %lld\n", static_cast<long long>(values.size()));
    std::printf("max_slots       %lld\n", budget.max_slots);
    std::printf("seed            %llu\n", static_cast<unsigned long long>(seed));
    return 0;
}

std::vector<double> build_values(double from, double to, long long steps,
                                 bool log_spacing) {
    if (steps < 1) throw invalid_input("requires steps >= 1");
    if (steps == 1) return {from};
    if (log_spacing && !(from > 0.0 && to > 0.0))
        throw invalid_input("requires positive endpoints for log spacing");
    std::vector<double> values;
    for (long long i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        values.push_back(log_spacing
                             ? std::exp(std::log(from) + t * (std::log(to) - std::log(from)))
                             : from + t * (to - from));
    }
    return values;
}

SweepParam parse_sweep_param(const std::string& name) {
    if (name == "lambda_r") return SweepParam::lambda_r;
    if (name == "lambda_f") return SweepParam::lambda_f;
    if (name == "lambda_total_symmetric") return SweepParam::lambda_total_symmetric;
    if (name == "v") return SweepParam::v;
    if (name == "R") return SweepParam::R;
    throw invalid_input(
        "unknown sweep parameter: " + name +
        " (expected lambda_r, lambda_f, lambda_total_symmetric, v, or R)");
}

int cmd_sweep(SweepSpec spec, const std::string& output) {
    // Every substituted point must be evaluable before any work starts.
    for (double value : spec.values)
        require_evaluable(substitute(spec.fixed, spec.varying, value));
    const std::vector<SweepRow> rows = run_sweep(spec);
    emit_csv(rows, output);
    emit_meta(spec, output);
    long long failed = 0;
    for (const auto& row : rows) failed += row.failed ? 1 : 0;
    std::printf("wrote %zu rows to %s (+ %s)\n", rows.size(), output.c_str(),
                meta_path_for(output).c_str());
    if (failed > 0) {
        std::printf("%lld rows failed; see empty simulation fields\n", failed);
        return 1;
    }
    return 0;
}

int cmd_compare(SweepSpec spec, const std::string& output) {
    spec.schemes = {SchemeKind::vmimo(), SchemeKind::flooding()};
    for (double value : spec.values)
        require_evaluable(substitute(spec.fixed, spec.varying, value));
    const std::vector<SweepRow> rows = run_sweep(spec);
    const std::vector<GainRow> gains = compare_schemes(rows);
    std::ofstream os(output, std::ios::binary);
    if (!os) throw io_failure("cannot open for writing: " + output);
    emit_gain_csv(gains, os);
    os.flush();
    if (!os) throw io_failure("write failed: " + output);
    std::printf("wrote %zu comparison rows to %s\n", gains.size(), output.c_str());
    for (const auto& g : gains)
        if (g.warning) {
            std::printf("warning rows present (%s)\n", g.note.c_str());
            return 1;
        }
    return 0;
}

int cmd_validate(std::uint64_t seed) {
    const std::vector<CheckResult> results = run_validation_suite(seed);
    long long failed = 0;
    for (const auto& res : results) {
        std::printf("[%s] %s: %s\n", res.passed ? "PASS" : "FAIL",
                    res.name.c_str(), res.detail.c_str());
        failed += res.passed ? 0 : 1;
    }
    std::printf("%lld of %zu checks failed\n", failed, results.size());
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Highway beacon propagation: analytic model and slotted "
                 "Monte-Carlo simulator"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Plain-text key=value config file; flags override the file");

    ScenarioParams params;
    std::uint64_t seed = 1;

    auto* analytic = app.add_subcommand("analytic", "Evaluate the closed-form model");
    add_param_flags(analytic, params);
    std::string analytic_csv;
    analytic->add_option("--csv", analytic_csv, "Also write a single-row CSV");

    auto* simulate = app.add_subcommand("simulate", "Run one scheme and print the IPS estimate");
    add_param_flags(simulate, params);
    std::string sim_scheme = "vmimo";
    int handshake = 1;
    long long sim_reps = 8;
    Budget sim_budget;
    std::string trace_path;
    simulate->add_option("--scheme", sim_scheme, "vmimo | flooding | reverse_aided")
        ->capture_default_str();
    simulate->add_option("--handshake-slots", handshake,
                         "Slots per unicast hop (reverse_aided)")
        ->capture_default_str();
    simulate->add_option("--replications", sim_reps, "Independent replications")
        ->capture_default_str();
    simulate->add_option("--max-slots", sim_budget.max_slots, "Slots per replication")
        ->capture_default_str();
    simulate->add_option("--min-cycles", sim_budget.min_cycles,
                         "Stop after this many measured renewal cycles (0: run all slots)")
        ->capture_default_str();
    simulate->add_option("--seed", seed, "Base seed")->capture_default_str();
    simulate->add_option("--trace", trace_path,
                         "Write a per-slot CSV trace of the first replication");

    auto* sweep = app.add_subcommand("sweep", "Sweep a parameter and write the results CSV");
    add_param_flags(sweep, params);
    std::string sweep_param = "lambda_total_symmetric";
    double sweep_from = 0.002, sweep_to = 0.02;
    long long sweep_steps = 5;
    bool sweep_log = false;
    std::string sweep_schemes = "vmimo,flooding";
    long long sweep_reps = 30;
    Budget sweep_budget;
    std::string sweep_output = "sweep.csv";
    int workers = 0;
    sweep->add_option("--param", sweep_param,
                      "lambda_r | lambda_f | lambda_total_symmetric | v | R")
        ->capture_default_str();
    sweep->add_option("--from", sweep_from, "First swept value")->capture_default_str();
    sweep->add_option("--to", sweep_to, "Last swept value")->capture_default_str();
    sweep->add_option("--steps", sweep_steps, "Number of swept values")
        ->capture_default_str();
    sweep->add_flag("--log", sweep_log, "Logarithmic value spacing");
    sweep->add_option("--schemes", sweep_schemes,
                      "Comma-separated scheme list")
        ->capture_default_str();
    sweep->add_option("--handshake-slots", handshake,
                      "Slots per unicast hop (reverse_aided)")
        ->capture_default_str();
    sweep->add_option("--replications", sweep_reps, "Replications per cell")
        ->capture_default_str();
    sweep->add_option("--max-slots", sweep_budget.max_slots, "Slots per replication")
        ->capture_default_str();
    sweep->add_option("--min-cycles", sweep_budget.min_cycles,
                      "Stop after this many measured renewal cycles (0: run all slots)")
        ->capture_default_str();
    sweep->add_option("--seed", seed, "Base seed")->capture_default_str();
    sweep->add_option("--output", sweep_output, "Output CSV path")
        ->capture_default_str();
    sweep->add_option("--workers", workers,
                      "Worker threads (0: hardware concurrency)")
        ->capture_default_str();

    auto* compare = app.add_subcommand(
        "compare", "Coupled vmimo-vs-flooding sweep and gain table");
    add_param_flags(compare, params);
    compare->add_option("--param", sweep_param,
                        "lambda_r | lambda_f | lambda_total_symmetric | v | R")
        ->capture_default_str();
    compare->add_option("--from", sweep_from, "First swept value")
        ->capture_default_str();
    compare->add_option("--to", sweep_to, "Last swept value")->capture_default_str();
    compare->add_option("--steps", sweep_steps, "Number of swept values")
        ->capture_default_str();
    compare->add_flag("--log", sweep_log, "Logarithmic value spacing");
    compare->add_option("--replications", sweep_reps, "Replications per cell")
        ->capture_default_str();
    compare->add_option("--max-slots", sweep_budget.max_slots,
                        "Slots per replication")
        ->capture_default_str();
    compare->add_option("--seed", seed, "Base seed")->capture_default_str();
    compare->add_option("--output", sweep_output, "Output CSV path")
        ->capture_default_str();
    compare->add_option("--workers", workers,
                        "Worker threads (0: hardware concurrency)")
        ->capture_default_str();

    auto* validate = app.add_subcommand(
        "validate", "Run the full cross-module property suite");
    validate->add_option("--seed", seed, "Suite seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(analytic)) return cmd_analytic(params, analytic_csv);
        if (app.got_subcommand(simulate)) {
            const SchemeKind scheme = parse_scheme(sim_scheme, handshake);
            return cmd_simulate(params, scheme, sim_reps, sim_budget, seed,
                                trace_path);
        }
        if (app.got_subcommand(sweep) || app.got_subcommand(compare)) {
            SweepSpec spec;
            spec.varying = parse_sweep_param(sweep_param);
            spec.values = build_values(sweep_from, sweep_to, sweep_steps, sweep_log);
            spec.fixed = params;
            spec.replications = sweep_reps;
            spec.budget = sweep_budget;
            spec.base_seed = seed;
            spec.workers = workers;
            if (app.got_subcommand(compare)) return cmd_compare(spec, sweep_output);
            spec.schemes.clear();
            std::string token;
            std::istringstream names(sweep_schemes);
            while (std::getline(names, token, ','))
                if (!token.empty()) spec.schemes.push_back(parse_scheme(token, handshake));
            return cmd_sweep(spec, sweep_output);
        }
        if (app.got_subcommand(validate)) return cmd_validate(seed);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const invalid_input& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const degenerate_model& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const under_budget& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
