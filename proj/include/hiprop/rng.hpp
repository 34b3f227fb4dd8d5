#ifndef HIPROP_RNG_HPP
#define HIPROP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hiprop {

// Stable 64-bit mixer used for seed derivation; the output sequence must
// never change across releases or platforms, so derived seeds (and hence
// every simulation result) stay reproducible.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for an independent sub-stream, stable in (seed, a, b, c).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(seed ^ 0xA24BAED4963EE407ULL ^ a);
    s = splitmix64(s ^ 0x9FB21C651E98DF25ULL ^ b);
    s = splitmix64(s ^ 0xE7037ED1A0B428DBULL ^ c);
    return s;
}

// One deterministic random stream. Variate generation is hand-rolled from the
// raw engine output because std::distribution implementations differ across
// standard libraries and results must be bit-reproducible.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on (0, 1]; never returns 0, so logarithms are safe.
    double uniform01() {
        return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on (lo, hi].
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Exponential with the given rate; strictly positive (ties at exact zero
    // are redrawn so sorted positions stay strictly increasing).
    double exponential(double rate) {
        for (;;) {
            double g = -std::log(uniform01()) / rate;
            if (g > 0.0) return g;
        }
    }

    // Poisson count via unit-rate gap counting: the number of unit-exponential
    // arrivals in [0, mean). Exact for any mean without e^-mean underflow;
    // cost is O(mean) draws, fine for the oracle workloads here.
    std::uint64_t poisson(double mean) {
        std::uint64_t n = 0;
        double acc = 0.0;
        for (;;) {
            acc += -std::log(uniform01());
            if (acc >= mean) return n;
            ++n;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace hiprop

#endif // HIPROP_RNG_HPP
