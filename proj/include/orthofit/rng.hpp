#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace orthofit {

/// SplitMix64 finalizer; used to spread seeds and derive independent
/// child seeds from a (seed, counter) pair.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based child seed: independent of execution order, so
/// replications can run on any thread layout and still reproduce.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64(splitmix64(seed) ^ splitmix64(counter + 1));
}

/// Deterministic generator with explicitly coded variate transforms.
/// The standard library distributions are implementation-defined, which
/// would break bit-reproducibility across toolchains, so the normal and
/// gamma draws are spelled out here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw in (0, 1].
    double uniform() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (cosine branch only; two uniforms
    /// per draw keeps the stream position independent of history).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang, with the power-of-uniform
    /// boost for shape < 1 (needed down to shape 0.05 for the smallest
    /// degrees of freedom in use).
    double gamma(double shape) {
        if (!(shape > 0.0)) throw std::domain_error("Rng::gamma: shape must be positive");
        if (shape < 1.0) {
            const double g = gamma(shape + 1.0);
            return g * std::pow(uniform(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Chi-square with k degrees of freedom (k need not be an integer).
    double chi_square(double k) { return 2.0 * gamma(0.5 * k); }

private:
    std::mt19937_64 engine_;
};

} // namespace orthofit
