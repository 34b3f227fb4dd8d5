#ifndef HIPROP_SNR_HPP
#define HIPROP_SNR_HPP

#include <cmath>
#include <span>
#include <utility>

#include "hiprop/errors.hpp"

namespace hiprop {

// Normalized combined-SNR statistic of a maximal-ratio-combining receiver:
// sum of 1/d_i^2 over all detectable transmitters. The physical SNR is this
// value scaled by the constant alpha*P_t/N_0, which cancels once thresholds
// are expressed as ranges, so the hot path never sees it.
inline double combined_snr_statistic(std::span<const double> distances) {
    double s = 0.0;
    for (double d : distances) {
        if (!(d > 0.0)) throw invalid_input("requires transmitter distances > 0");
        s += 1.0 / (d * d);
    }
    return s;
}

// Convert raw SNR thresholds to the equivalent decode/detect ranges under
// free-space path loss: range = sqrt(alpha_pt_over_n0 / threshold).
inline std::pair<double, double> ranges_from_thresholds(double alpha_pt_over_n0,
                                                        double gamma_dec,
                                                        double gamma_det) {
    if (!(alpha_pt_over_n0 > 0.0) || !(gamma_dec > 0.0) || !(gamma_det > 0.0))
        throw invalid_input("requires positive SNR constants");
    if (gamma_det > gamma_dec)
        throw invalid_input("requires gamma_det <= gamma_dec");
    double r = std::sqrt(alpha_pt_over_n0 / gamma_dec);
    double R = std::sqrt(alpha_pt_over_n0 / gamma_det);
    return {r, R};
}

// Decode succeeds when the combined statistic reaches the single-link
// threshold 1/r^2; the boundary counts as success.
inline bool decode_test(double statistic, double r) {
    if (!(r > 0.0)) throw invalid_input("requires r > 0");
    return statistic >= 1.0 / (r * r);
}

} // namespace hiprop

#endif // HIPROP_SNR_HPP
