#ifndef HIPROP_ANALYTIC_HPP
#define HIPROP_ANALYTIC_HPP

#include <cmath>
#include <vector>

#include "hiprop/errors.hpp"
#include "hiprop/params.hpp"

namespace hiprop {

// Standard normal CDF through the complementary error function; absolute
// accuracy ~1e-16, needed because the blocking probability sits inside
// ratios amplified by its reciprocal.
inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Per-slot probability that no vehicle ahead can decode even with combining:
// the product of "no vehicle within single-link range" and the Gaussian tail
// of the combined statistic of detectable-but-not-decodable transmitters.
inline double blocking_probability(double lambda, double r, double R) {
    if (!(lambda > 0.0)) throw invalid_input("requires lambda > 0");
    if (!(r > 0.0)) throw invalid_input("requires r > 0");
    if (!(R > r)) throw invalid_input("requires R > r");
    const double mu = lambda * (1.0 / r - 1.0 / R);
    const double sigma =
        std::sqrt(lambda / 3.0 * (1.0 / (r * r * r) - 1.0 / (R * R * R)));
    const double z = (1.0 / (r * r) - mu) / sigma;
    return std::exp(-lambda * r) * normal_cdf(z);
}

// Per-slot next-head-lane split and the hop-phase exit probabilities.
struct TransitionProbs {
    double p_b;    // blocked this slot
    double p_f;    // next head lands in the forward lane
    double p_r;    // next head lands in the reverse lane
    double sigma1; // hop phase exits into a stop (reverse-lane block)
    double sigma2; // hop phase exits into a carry (forward-lane block)
};

inline TransitionProbs transition_probabilities(double lambda_r, double lambda_f,
                                                double p_b) {
    if (!(lambda_r >= 0.0) || !(lambda_f >= 0.0))
        throw invalid_input("requires nonnegative densities");
    const double lambda = lambda_r + lambda_f;
    if (!(lambda > 0.0)) throw invalid_input("requires lambda_r + lambda_f > 0");
    if (!(p_b >= 0.0 && p_b <= 1.0)) throw invalid_input("requires p_b in [0,1]");
    TransitionProbs t;
    t.p_b = p_b;
    t.p_f = (1.0 - p_b) * lambda_f / lambda;
    t.p_r = (1.0 - p_b) * lambda_r / lambda;
    t.sigma1 = t.p_r;
    t.sigma2 = 1.0 - t.sigma1;
    return t;
}

// Mean wait on a static reverse-lane head until bidirectional traffic covers
// the mean gap 1/lambda at closing speed 2v.
inline double expected_stop_time(double lambda, double v) {
    if (!(lambda > 0.0)) throw invalid_input("requires lambda > 0");
    if (!(v > 0.0)) throw invalid_input("requires v > 0");
    return 1.0 / (2.0 * v * lambda);
}

// Mean duration and ground the beacon covers while a forward-lane head
// carries it at relative speed 2v across the mean gap 1/lambda.
inline std::pair<double, double> prop2_expectations(double lambda, double v) {
    if (!(lambda > 0.0)) throw invalid_input("requires lambda > 0");
    if (!(v > 0.0)) throw invalid_input("requires v > 0");
    return {1.0 / (2.0 * v * lambda), 1.0 / lambda};
}

// Closed-form expected one-slot head advance under combining; harmonic blend
// of the sparse limit lambda*r^2 and the detection ceiling R, always < R.
inline double expected_max_hop(double lambda, double r, double R) {
    if (!(lambda > 0.0)) throw invalid_input("requires lambda > 0");
    if (!(r > 0.0)) throw invalid_input("requires r > 0");
    if (!(R > r)) throw invalid_input("requires R > r");
    return lambda * r * r * R / (lambda * r * r + R);
}

namespace detail {

inline TransitionProbs vmimo_transitions(const ScenarioParams& p) {
    if (!(p.lambda_r > 0.0))
        throw degenerate_model(
            "lambda_r = 0 makes the stop state unreachable and 1/sigma1 singular");
    return transition_probabilities(p.lambda_r, p.lambda_f,
                                    blocking_probability(p.lambda_total(), p.r, p.R));
}

} // namespace detail

// Expected duration and distance of one full hop-and-carry phase: a geometric
// number of carry excursions (sigma2/sigma1 on average) interleaved with hop
// runs of expected length 1/p_b slots.
inline std::pair<double, double> propagate_expectations(double lambda_r,
                                                        double lambda_f, double v,
                                                        double r, double R,
                                                        double tau) {
    ScenarioParams p{lambda_r, lambda_f, v, r, R, tau};
    require_evaluable(p);
    const TransitionProbs t = detail::vmimo_transitions(p);
    const double lambda = p.lambda_total();
    const double ratio21 = t.sigma2 / t.sigma1;
    const double A = ratio21 + t.sigma1;
    const double hop = expected_max_hop(lambda, r, R);
    const double e_t = A * tau / t.p_b + ratio21 / (2.0 * v * lambda);
    const double e_d = A * hop / t.p_b + ratio21 / lambda;
    return {e_t, e_d};
}

// Long-run IPS of the combining scheme, evaluated in a form that stays finite
// when the blocking probability underflows (dense traffic).
inline double ips_vmimo(const ScenarioParams& p) {
    require_evaluable(p);
    const TransitionProbs t = detail::vmimo_transitions(p);
    const double lambda = p.lambda_total();
    const double ratio21 = t.sigma2 / t.sigma1;
    const double A = ratio21 + t.sigma1;
    const double hop = expected_max_hop(lambda, p.r, p.R);
    const double stop_term = (1.0 / t.sigma1) / (2.0 * p.v * lambda);
    if (t.p_b < 1e-12) {
        // Numerator and denominator both scaled by p_b to avoid 1/p_b overflow.
        const double num = A * hop + ratio21 / lambda * t.p_b;
        const double den = A * p.tau + stop_term * t.p_b;
        return num / den;
    }
    const double num = A * hop / t.p_b + ratio21 / lambda;
    const double den = A * p.tau / t.p_b + stop_term;
    return num / den;
}

// Long-run IPS of single-link flooding: hop distance r, hop runs of expected
// length e^{lambda r}, written with the exponential factored into the
// numerator and denominator so dense traffic cannot overflow.
inline double ips_conventional(const ScenarioParams& p) {
    require_evaluable(p);
    if (!(p.lambda_r > 0.0))
        throw degenerate_model(
            "lambda_r = 0 makes the stop state unreachable and 1/sigma1 singular");
    const double lambda = p.lambda_total();
    const double s1 = (p.lambda_r / lambda) * (1.0 - std::exp(-lambda * p.r));
    const double s2 = 1.0 - s1;
    const double ratio21 = s2 / s1;
    const double A = ratio21 + s1;
    const double damp = std::exp(-lambda * p.r); // 1 / (expected hop-run length)
    const double num = A * p.r + ratio21 / lambda * damp;
    const double den = A * p.tau + (1.0 / s1) / (2.0 * p.v * lambda) * damp;
    return num / den;
}

// Every intermediate the closed-form chain produces for one parameter point.
struct RenewalExpectations {
    double e_t_stop;   // s
    double e_t_prop2;  // s
    double e_d_prop2;  // m
    double e_d_mprop;  // m, expected one-slot hop
    double e_t_prop;   // s
    double e_d_prop;   // m
};

struct AnalyticReport {
    TransitionProbs transition;
    RenewalExpectations expectations;
    double ips_vmimo;
    double ips_conventional;
    double gain;
};

inline AnalyticReport analytic_report(const ScenarioParams& p) {
    require_evaluable(p);
    AnalyticReport rep;
    rep.transition = detail::vmimo_transitions(p);
    const double lambda = p.lambda_total();
    rep.expectations.e_t_stop = expected_stop_time(lambda, p.v);
    auto [t2, d2] = prop2_expectations(lambda, p.v);
    rep.expectations.e_t_prop2 = t2;
    rep.expectations.e_d_prop2 = d2;
    rep.expectations.e_d_mprop = expected_max_hop(lambda, p.r, p.R);
    auto [tp, dp] =
        propagate_expectations(p.lambda_r, p.lambda_f, p.v, p.r, p.R, p.tau);
    rep.expectations.e_t_prop = tp;
    rep.expectations.e_d_prop = dp;
    rep.ips_vmimo = hiprop::ips_vmimo(p);
    rep.ips_conventional = hiprop::ips_conventional(p);
    rep.gain = rep.ips_vmimo / rep.ips_conventional;
    return rep;
}

// Published limiting behaviors. low_density_limit reports the claimed sparse
// limit v; high-density fields evaluate the dense approximation at the given
// densities and its ceiling R/tau; gain fields mirror that for the ratio.
struct AsymptoticsReport {
    double low_density_limit;         // m/s
    double high_density_approx;       // m/s at the given lambda
    double high_density_limit;        // m/s
    double zero_speed_limit;          // m/s
    double infinite_speed_limit;      // m/s at the given lambda
    double gain_high_density_approx;  // dimensionless at the given lambda
    double gain_limit;                // dimensionless
};

inline AsymptoticsReport asymptotics_report(const ScenarioParams& p) {
    require_evaluable(p);
    const TransitionProbs t = detail::vmimo_transitions(p);
    const double lambda = p.lambda_total();
    const double hop = expected_max_hop(lambda, p.r, p.R);
    const double ratio21 = t.sigma2 / t.sigma1;
    const double A = ratio21 + t.sigma1;
    AsymptoticsReport rep;
    rep.low_density_limit = p.v;
    rep.high_density_approx = hop / p.tau;
    rep.high_density_limit = p.R / p.tau;
    rep.zero_speed_limit = 0.0;
    // v -> infinity removes every wait term; what remains is the hop rate plus
    // the carry distance amortized over the hop-run time.
    rep.infinite_speed_limit = hop / p.tau + ratio21 * t.p_b / (lambda * A * p.tau);
    rep.gain_high_density_approx = lambda * p.r * p.R / (lambda * p.r * p.r + p.R);
    rep.gain_limit = p.R / p.r;
    return rep;
}

// Least-squares fit of (ips_vmimo - v) against lambda_total^3 over a
// symmetric-density grid; reports the coefficient of determination so the
// claimed sparse-regime cubic shape can be checked rather than assumed.
struct CubicFit {
    double r_squared;
    double slope;
    double intercept;
};

inline CubicFit low_density_cubic_fit(const ScenarioParams& base,
                                      double lambda_total_lo,
                                      double lambda_total_hi, int n_points) {
    if (!(lambda_total_lo > 0.0) || !(lambda_total_hi > lambda_total_lo))
        throw invalid_input("requires 0 < lambda_total_lo < lambda_total_hi");
    if (n_points < 3) throw invalid_input("requires n_points >= 3");
    std::vector<double> xs, ys;
    xs.reserve(n_points);
    ys.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double lam = lambda_total_lo +
                           (lambda_total_hi - lambda_total_lo) * i / (n_points - 1);
        ScenarioParams p = base;
        p.lambda_r = lam / 2.0;
        p.lambda_f = lam / 2.0;
        xs.push_back(lam * lam * lam);
        ys.push_back(ips_vmimo(p) - p.v);
    }
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n_points; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n_points;
    my /= n_points;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = 0; i < n_points; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    CubicFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double e = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ss_res += e * e;
    }
    fit.r_squared = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

} // namespace hiprop

#endif // HIPROP_ANALYTIC_HPP
