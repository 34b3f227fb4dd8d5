#ifndef HIPROP_MC_ORACLES_HPP
#define HIPROP_MC_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hiprop/errors.hpp"
#include "hiprop/rng.hpp"
#include "hiprop/snr.hpp"

namespace hiprop {

// A Monte-Carlo point estimate with its one-sigma standard error.
struct McEstimate {
    double estimate;
    double std_error;
    long long n_samples;
};

// Direct sampling of the blocking event, independent of the Gaussian
// approximation: condition on an empty single-link zone (probability
// e^{-lambda r}), then sample the detectable band (r, R] as a Poisson
// population of uniform distances and test whether the combined statistic
// still falls short of the decode threshold.
inline McEstimate mc_blocking_probability(double lambda, double r, double R,
                                          long long samples, std::uint64_t seed) {
    if (!(lambda > 0.0)) throw invalid_input("requires lambda > 0");
    if (!(r > 0.0)) throw invalid_input("requires r > 0");
    if (!(R > r)) throw invalid_input("requires R > r");
    if (samples < 1) throw invalid_input("requires samples >= 1");
    RngStream rng(seed);
    const double thr = 1.0 / (r * r);
    const double band_mean = lambda * (R - r);
    long long blocked = 0;
    for (long long s = 0; s < samples; ++s) {
        const long long n = rng.poisson(band_mean);
        double stat = 0.0;
        for (long long i = 0; i < n; ++i) {
            const double d = rng.uniform(r, R);
            stat += 1.0 / (d * d);
        }
        if (stat < thr) ++blocked;
    }
    const double empty = std::exp(-lambda * r);
    const double phat = static_cast<double>(blocked) / static_cast<double>(samples);
    McEstimate est;
    est.estimate = empty * phat;
    est.std_error =
        empty * std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
    est.n_samples = samples;
    return est;
}

// Direct sampling of the one-slot head advance: a lone informed head at the
// origin, a Poisson field over (0, R], and a left-to-right chained pass in
// which each newly informed vehicle joins the transmitter set for the
// vehicles beyond it. The sweep stops at the first decode failure; vehicles
// beyond a failed one face the same transmitters at larger distances plus a
// gap, so the in-order chain captures the within-slot cascade.
inline McEstimate mc_expected_max_hop(double lambda, double r, double R,
                                      long long samples, std::uint64_t seed) {
    if (!(lambda > 0.0)) throw invalid_input("requires lambda > 0");
    if (!(r > 0.0)) throw invalid_input("requires r > 0");
    if (!(R > r)) throw invalid_input("requires R > r");
    if (samples < 1) throw invalid_input("requires samples >= 1");
    RngStream rng(seed);
    const double thr = 1.0 / (r * r);
    double sum = 0.0, sum_sq = 0.0;
    std::vector<double> field, informed;
    for (long long s = 0; s < samples; ++s) {
        const long long n = rng.poisson(lambda * R);
        field.clear();
        for (long long i = 0; i < n; ++i) field.push_back(rng.uniform(0.0, R));
        std::sort(field.begin(), field.end());
        informed.assign(1, 0.0);
        double hop = 0.0;
        for (double x : field) {
            double stat = 0.0;
            for (double t : informed) {
                const double d = x - t;
                if (d <= R) stat += 1.0 / (d * d);
            }
            if (stat >= thr) {
                informed.push_back(x);
                hop = x;
            } else {
                break;
            }
        }
        sum += hop;
        sum_sq += hop * hop;
    }
    const double mean = sum / static_cast<double>(samples);
    const double var =
        std::max(0.0, sum_sq / static_cast<double>(samples) - mean * mean);
    McEstimate est;
    est.estimate = mean;
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    est.n_samples = samples;
    return est;
}

} // namespace hiprop

#endif // HIPROP_MC_ORACLES_HPP
