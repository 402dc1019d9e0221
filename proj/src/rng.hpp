#ifndef CORTKIT_RNG_HPP
#define CORTKIT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace cortkit {

/// Counter-based generator: output i of a stream with key k is
/// mix64(k + i * GAMMA), the SplitMix64 finalizer on an additive counter.
/// Streams are identified by a 64-bit key; substreams are derived by
/// rehashing (key, salt), so results never depend on consumption order
/// elsewhere in the program.
class Rng {
public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    explicit Rng(std::uint64_t seed) : key_(mix64(seed + kGamma)) {}

    /// Independent substream; (seed, salt) pairs map to disjoint streams
    /// with overwhelming probability.
    Rng stream(std::uint64_t salt) const {
        Rng r(0);
        r.key_ = mix64(key_ ^ mix64(salt * kGamma + 0x6a09e667f3bcc909ULL));
        return r;
    }
    Rng stream(std::uint64_t s1, std::uint64_t s2) const { return stream(s1).stream(s2); }

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

    /// Uniform on the open interval (0,1).
    double next_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on (lo,hi).
    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // multiply-shift; bias is negligible for n << 2^64 and keeps the
        // stream consumption at one draw per call.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    double next_exponential() { return -std::log(next_double()); }

    /// One normal variate from two uniforms (Box-Muller, cosine branch).
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 via the boost
    /// transform Gamma(shape+1) * U^(1/shape).
    double next_gamma(double shape) {
        if (shape < 1.0) {
            double g = next_gamma(shape + 1.0);
            return g * std::pow(next_double(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace cortkit

#endif
