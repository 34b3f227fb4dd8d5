#ifndef HIPROP_EXPERIMENTS_HPP
#define HIPROP_EXPERIMENTS_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hiprop/analytic.hpp"
#include "hiprop/engine.hpp"
#include "hiprop/errors.hpp"
#include "hiprop/params.hpp"
#include "hiprop/rng.hpp"

namespace hiprop {

inline constexpr const char* kArtifactVersion = "hiprop 1.0.0";

enum class SweepParam { lambda_r, lambda_f, lambda_total_symmetric, v, R };

inline const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::lambda_r: return "lambda_r";
        case SweepParam::lambda_f: return "lambda_f";
        case SweepParam::lambda_total_symmetric: return "lambda_total_symmetric";
        case SweepParam::v: return "v";
        default: return "R";
    }
}

// Substitutes one sweep value into the fixed parameter set.
inline ScenarioParams substitute(const ScenarioParams& fixed, SweepParam which,
                                 double value) {
    ScenarioParams p = fixed;
    switch (which) {
        case SweepParam::lambda_r: p.lambda_r = value; break;
        case SweepParam::lambda_f: p.lambda_f = value; break;
        case SweepParam::lambda_total_symmetric:
            p.lambda_r = value / 2.0;
            p.lambda_f = value / 2.0;
            break;
        case SweepParam::v: p.v = value; break;
        case SweepParam::R: p.R = value; break;
    }
    return p;
}

struct SweepSpec {
    SweepParam varying = SweepParam::lambda_total_symmetric;
    std::vector<double> values;
    ScenarioParams fixed;
    std::vector<SchemeKind> schemes{SchemeKind::vmimo(), SchemeKind::flooding()};
    long long replications = 30;
    Budget budget{20000, 0};
    std::uint64_t base_seed = 1;
    int workers = 0; // <= 0: hardware concurrency
};

struct SweepRow {
    ScenarioParams params;
    SchemeKind scheme;
    double ips_sim_mean = 0.0;
    double ips_sim_ci95 = 0.0;
    std::optional<double> ips_analytic; // absent for reverse_aided
    std::optional<double> gain_vs_flooding;
    long long replications = 0;
    std::uint64_t base_seed = 0;
    bool failed = false;
    std::string error;
};

// The per-replication seed contract: any single (value index, scheme,
// replication) cell of a sweep can be reproduced in isolation.
inline std::uint64_t sweep_replication_seed(std::uint64_t base_seed,
                                            std::size_t value_idx,
                                            const SchemeKind& scheme,
                                            long long rep_idx) {
    return derive_seed(base_seed, static_cast<std::uint64_t>(value_idx),
                       static_cast<std::uint64_t>(scheme.kind) + 1,
                       static_cast<std::uint64_t>(rep_idx));
}

// Runs every (value x scheme) cell with a bounded worker pool. Output order
// is fixed by value order then scheme name; failures mark the row rather
// than aborting the sweep.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.values.empty()) throw invalid_input("requires nonempty values");
    if (spec.schemes.empty()) throw invalid_input("requires nonempty schemes");
    if (spec.replications < 1) throw invalid_input("requires replications >= 1");

    struct RowPlan {
        std::size_t value_idx;
        std::size_t scheme_idx; // into spec.schemes
        ScenarioParams params;
        bool valid = true;
        std::string error;
    };

    // Row order: sweep value order, then scheme name.
    std::vector<std::size_t> scheme_order(spec.schemes.size());
    for (std::size_t i = 0; i < scheme_order.size(); ++i) scheme_order[i] = i;
    std::stable_sort(scheme_order.begin(), scheme_order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return std::string(scheme_name(spec.schemes[a])) <
                                std::string(scheme_name(spec.schemes[b]));
                     });

    std::vector<RowPlan> plans;
    plans.reserve(spec.values.size() * spec.schemes.size());
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        for (std::size_t so : scheme_order) {
            RowPlan plan;
            plan.value_idx = vi;
            plan.scheme_idx = so;
            plan.params = substitute(spec.fixed, spec.varying, spec.values[vi]);
            try {
                require_evaluable(plan.params);
            } catch (const std::exception& e) {
                plan.valid = false;
                plan.error = e.what();
            }
            plans.push_back(std::move(plan));
        }
    }

    // Flat work items (row, replication) consumed by the pool; results land
    // in index-addressed slots so scheduling cannot affect the output.
    const std::size_t n_rows = plans.size();
    const std::size_t reps = static_cast<std::size_t>(spec.replications);
    std::vector<double> rep_ips(n_rows * reps, 0.0);
    std::vector<std::string> rep_error(n_rows);
    std::mutex error_mutex;

    std::vector<std::size_t> items;
    for (std::size_t row = 0; row < n_rows; ++row)
        if (plans[row].valid)
            for (std::size_t k = 0; k < reps; ++k) items.push_back(row * reps + k);

    std::atomic<std::size_t> next{0};
    const auto work = [&]() {
        for (;;) {
            const std::size_t item = next.fetch_add(1);
            if (item >= items.size()) return;
            const std::size_t slot = items[item];
            const std::size_t row = slot / reps;
            const std::size_t k = slot % reps;
            const RowPlan& plan = plans[row];
            try {
                const std::uint64_t seed = sweep_replication_seed(
                    spec.base_seed, plan.value_idx,
                    spec.schemes[plan.scheme_idx], static_cast<long long>(k));
                ReplicationResult r =
                    run_scenario(plan.params, spec.schemes[plan.scheme_idx],
                                 spec.budget, seed);
                rep_ips[slot] = r.estimate.mean;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (rep_error[row].empty()) rep_error[row] = e.what();
            }
        }
    };

    unsigned n_workers = spec.workers > 0
                             ? static_cast<unsigned>(spec.workers)
                             : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::min<unsigned>(
        n_workers, static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w + 1 < n_workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<SweepRow> rows(n_rows);
    for (std::size_t row = 0; row < n_rows; ++row) {
        const RowPlan& plan = plans[row];
        SweepRow& out = rows[row];
        out.params = plan.params;
        out.scheme = spec.schemes[plan.scheme_idx];
        out.replications = spec.replications;
        out.base_seed = spec.base_seed;
        if (!plan.valid) {
            out.failed = true;
            out.error = plan.error;
            continue;
        }
        if (!rep_error[row].empty()) {
            out.failed = true;
            out.error = rep_error[row];
            continue;
        }
        std::vector<double> values(rep_ips.begin() + static_cast<std::ptrdiff_t>(row * reps),
                                   rep_ips.begin() + static_cast<std::ptrdiff_t>((row + 1) * reps));
        if (values.size() >= 2) {
            const IpsEstimate est = estimate_ips(values);
            out.ips_sim_mean = est.mean;
            out.ips_sim_ci95 = est.ci95_halfwidth;
        } else {
            out.ips_sim_mean = values[0];
            out.ips_sim_ci95 = 0.0;
        }
        try {
            if (out.scheme.kind == SchemeId::vmimo)
                out.ips_analytic = ips_vmimo(plan.params);
            else if (out.scheme.kind == SchemeId::flooding)
                out.ips_analytic = ips_conventional(plan.params);
        } catch (const std::exception& e) {
            out.failed = true;
            out.error = e.what();
        }
    }

    // Gain versus the flooding row of the same sweep value, when present;
    // rows are laid out in per-value blocks of spec.schemes.size().
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        const std::size_t lo = vi * spec.schemes.size();
        const std::size_t hi = lo + spec.schemes.size();
        const SweepRow* flooding = nullptr;
        for (std::size_t k = lo; k < hi; ++k)
            if (!rows[k].failed && rows[k].scheme.kind == SchemeId::flooding) {
                flooding = &rows[k];
                break;
            }
        if (!flooding || flooding->ips_sim_mean <= 0.0) continue;
        for (std::size_t k = lo; k < hi; ++k)
            if (!rows[k].failed)
                rows[k].gain_vs_flooding =
                    rows[k].ips_sim_mean / flooding->ips_sim_mean;
    }
    return rows;
}

namespace detail {

// 6-significant-digit formatting shared by every CSV column.
inline std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace detail

inline constexpr const char* kSweepCsvHeader =
    "lambda_r,lambda_f,v,r,R,tau,scheme,ips_sim_mean,ips_sim_ci95,"
    "ips_analytic,gain_vs_flooding,replications,base_seed";

inline void emit_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << kSweepCsvHeader << '\n';
    for (const auto& row : rows) {
        os << detail::fmt6(row.params.lambda_r) << ','
           << detail::fmt6(row.params.lambda_f) << ',' << detail::fmt6(row.params.v)
           << ',' << detail::fmt6(row.params.r) << ',' << detail::fmt6(row.params.R)
           << ',' << detail::fmt6(row.params.tau) << ',' << scheme_name(row.scheme)
           << ',';
        if (!row.failed)
            os << detail::fmt6(row.ips_sim_mean) << ','
               << detail::fmt6(row.ips_sim_ci95) << ',';
        else
            os << ",,";
        if (row.ips_analytic) os << detail::fmt6(*row.ips_analytic);
        os << ',';
        if (row.gain_vs_flooding) os << detail::fmt6(*row.gain_vs_flooding);
        os << ',' << row.replications << ',' << row.base_seed << '\n';
    }
}

inline void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_failure("cannot open for writing: " + path);
    emit_csv(rows, os);
    os.flush();
    if (!os) throw io_failure("write failed: " + path);
}

// Companion metadata path: the CSV extension replaced by ".meta".
inline std::string meta_path_for(const std::string& csv_path) {
    const std::size_t slash = csv_path.find_last_of("/\\");
    const std::size_t dot = csv_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return csv_path + ".meta";
    return csv_path.substr(0, dot) + ".meta";
}

inline void emit_meta(const SweepSpec& spec, std::ostream& os) {
    os << "artifact_version=" << kArtifactVersion << '\n';
    os << "varying=" << sweep_param_name(spec.varying) << '\n';
    os << "values=";
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        if (i) os << ',';
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", spec.values[i]);
        os << buf;
    }
    os << '\n';
    os << "fixed.lambda_r=" << detail::fmt6(spec.fixed.lambda_r) << '\n';
    os << "fixed.lambda_f=" << detail::fmt6(spec.fixed.lambda_f) << '\n';
    os << "fixed.v=" << detail::fmt6(spec.fixed.v) << '\n';
    os << "fixed.r=" << detail::fmt6(spec.fixed.r) << '\n';
    os << "fixed.R=" << detail::fmt6(spec.fixed.R) << '\n';
    os << "fixed.tau=" << detail::fmt6(spec.fixed.tau) << '\n';
    os << "schemes=";
    for (std::size_t i = 0; i < spec.schemes.size(); ++i) {
        if (i) os << ',';
        os << scheme_name(spec.schemes[i]);
        if (spec.schemes[i].kind == SchemeId::reverse_aided)
            os << ':' << spec.schemes[i].handshake_slots;
    }
    os << '\n';
    os << "replications=" << spec.replications << '\n';
    os << "budget.max_slots=" << spec.budget.max_slots << '\n';
    os << "budget.min_cycles=" << spec.budget.min_cycles << '\n';
    os << "base_seed=" << spec.base_seed << '\n';
}

inline void emit_meta(const SweepSpec& spec, const std::string& csv_path) {
    const std::string path = meta_path_for(csv_path);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_failure("cannot open for writing: " + path);
    emit_meta(spec, os);
    os.flush();
    if (!os) throw io_failure("write failed: " + path);
}

// One matched comparison point of the two broadcast schemes.
struct GainRow {
    ScenarioParams params;
    double g_sim = 0.0;
    double g_analytic = 0.0;
    double g_high_density_ref = 0.0; // lambda*r*R/(lambda*r^2+R)
    bool warning = false;
    std::string note;
};

inline std::vector<GainRow> compare_schemes(const std::vector<SweepRow>& rows) {
    std::vector<GainRow> out;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (used[i] || rows[i].scheme.kind != SchemeId::vmimo) continue;
        const SweepRow& vm = rows[i];
        const SweepRow* fl = nullptr;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (used[j] || rows[j].scheme.kind != SchemeId::flooding) continue;
            if (rows[j].params == vm.params) {
                fl = &rows[j];
                used[j] = true;
                break;
            }
        }
        used[i] = true;
        GainRow g;
        g.params = vm.params;
        const double lambda = vm.params.lambda_total();
        g.g_high_density_ref = lambda * vm.params.r * vm.params.R /
                               (lambda * vm.params.r * vm.params.r + vm.params.R);
        if (!fl || vm.failed || fl->failed) {
            g.warning = true;
            g.note = !fl ? "no matching flooding row" : "row failed";
            out.push_back(g);
            continue;
        }
        if (fl->ips_sim_mean > 0.0) g.g_sim = vm.ips_sim_mean / fl->ips_sim_mean;
        try {
            g.g_analytic = ips_vmimo(vm.params) / ips_conventional(vm.params);
        } catch (const std::exception& e) {
            g.warning = true;
            g.note = e.what();
        }
        out.push_back(g);
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (used[j] || rows[j].scheme.kind != SchemeId::flooding) continue;
        GainRow g;
        g.params = rows[j].params;
        g.warning = true;
        g.note = "no matching vmimo row";
        out.push_back(g);
    }
    return out;
}

inline constexpr const char* kGainCsvHeader =
    "lambda_r,lambda_f,v,r,R,tau,g_sim,g_analytic,g_high_density_ref,note";

inline void emit_gain_csv(const std::vector<GainRow>& rows, std::ostream& os) {
    os << kGainCsvHeader << '\n';
    for (const auto& g : rows) {
        os << detail::fmt6(g.params.lambda_r) << ',' << detail::fmt6(g.params.lambda_f)
           << ',' << detail::fmt6(g.params.v) << ',' << detail::fmt6(g.params.r)
           << ',' << detail::fmt6(g.params.R) << ',' << detail::fmt6(g.params.tau)
           << ',';
        if (!g.warning)
            os << detail::fmt6(g.g_sim) << ',' << detail::fmt6(g.g_analytic) << ',';
        else
            os << ",,";
        os << detail::fmt6(g.g_high_density_ref) << ',' << g.note << '\n';
    }
}

} // namespace hiprop

#endif // HIPROP_EXPERIMENTS_HPP
