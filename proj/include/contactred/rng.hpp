#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace contactred {

/// FNV-1a 64-bit hash; used to derive per-check RNG streams and to
/// fingerprint scenario configs.
inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/**
 * Deterministic random source for randomized checks. Doubles are produced
 * by an explicit bit mapping rather than std::uniform_real_distribution,
 * so identical seeds give identical streams on every standard library.
 * split(label) derives an independent stream, letting check batches run
 * in any order (or in parallel) without changing results.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    Eigen::VectorXd uniform_vector(int dim, double lo, double hi) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
        return v;
    }

    Eigen::VectorXd normal_vector(int dim) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = normal();
        return v;
    }

    /// Independent child stream, addressed by label.
    Rng split(std::string_view label) {
        return Rng(fnv1a(label) ^ gen_());
    }

private:
    std::mt19937_64 gen_;
};

} // namespace contactred
