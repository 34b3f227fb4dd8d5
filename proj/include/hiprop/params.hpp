#ifndef HIPROP_PARAMS_HPP
#define HIPROP_PARAMS_HPP

#include <cmath>
#include <string>

#include "hiprop/errors.hpp"

namespace hiprop {

// Every model parameter of one scenario, in SI base units throughout:
// densities in vehicles/m, speeds in m/s, ranges in m, slot duration in s.
// The single source of truth for a run.
struct ScenarioParams {
    double lambda_r = 0.005; // vehicle density, reverse (westbound) lane
    double lambda_f = 0.005; // vehicle density, forward (eastbound) lane
    double v = 25.0;         // ground speed of every vehicle
    double r = 200.0;        // transmission range (single-link decode)
    double R = 600.0;        // detection range (combining contribution)
    double tau = 0.025;      // slot duration

    double lambda_total() const { return lambda_r + lambda_f; }
    bool operator==(const ScenarioParams&) const = default;
};

// Geometry and sign constraints every consumer needs; the engine accepts
// v = 0 and empty lanes (their long-run IPS is 0 by construction).
inline void require_basic(const ScenarioParams& p) {
    if (!(p.r > 0.0)) throw invalid_input("requires r > 0");
    if (!(p.R > p.r)) throw invalid_input("requires R > r");
    if (!(p.tau > 0.0)) throw invalid_input("requires tau > 0");
    if (!(p.lambda_r >= 0.0)) throw invalid_input("requires lambda_r >= 0");
    if (!(p.lambda_f >= 0.0)) throw invalid_input("requires lambda_f >= 0");
    if (!(p.v >= 0.0)) throw invalid_input("requires v >= 0");
    for (double x : {p.lambda_r, p.lambda_f, p.v, p.r, p.R, p.tau})
        if (!std::isfinite(x)) throw invalid_input("requires finite parameters");
}

// Full constraints for closed-form evaluation and the CLI: motion and traffic
// must both be present or the IPS question is vacuous.
inline void require_evaluable(const ScenarioParams& p) {
    require_basic(p);
    if (!(p.v > 0.0)) throw invalid_input("requires v > 0");
    if (!(p.lambda_total() > 0.0))
        throw invalid_input("requires lambda_r + lambda_f > 0");
}

} // namespace hiprop

#endif // HIPROP_PARAMS_HPP
