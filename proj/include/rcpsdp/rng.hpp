#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rcpsdp {

/// Deterministic random source. All distributions are implemented by hand on
/// top of mt19937_64 so that a given seed yields the same stream on every
/// platform and standard library (std::normal_distribution etc. are
/// implementation-defined and would break reproducible runs).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal via Box-Muller. Consumes exactly two uniforms per
    /// draw (no caching), so consumption order is a pure function of the
    /// call sequence.
    double normal() {
        double u1 = 1.0 - uniform01(); // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Derive an independent stream (used by the phase-1 auxiliary solve).
    Rng split() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 gen_;
};

} // namespace rcpsdp
