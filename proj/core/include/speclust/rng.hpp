#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace speclust {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer. Used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Seed for replication `rep_index` under `master_seed`:
/// mix64(master_seed XOR golden_gamma * rep_index). Replications are 0-indexed.
constexpr std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t rep_index) {
    return mix64(master_seed ^ (golden_gamma * rep_index));
}

/// Deterministic source of uniforms and standard normals.
///
/// Consumption order is part of the reproducibility contract:
///   - next_u64() advances the mt19937_64 engine by one draw.
///   - uniform01() consumes one u64 (top 53 bits -> [0,1)).
///   - rademacher() consumes one u64 (top bit set -> +1, else -1).
///   - normal_pair() runs polar Box-Muller: each rejection attempt consumes
///     exactly two uniform01() draws (u before v); returns (u*f, v*f).
///   - fill_standard_normal(out) consumes ceil(len/2) accepted pairs; for odd
///     lengths the second normal of the last pair is discarded, so the spare
///     never leaks into a later call.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    int rademacher() { return (next_u64() >> 63) ? +1 : -1; }

    std::pair<double, double> normal_pair() {
        for (;;) {
            const double u = 2.0 * uniform01() - 1.0;
            const double v = 2.0 * uniform01() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) {
                const double f = std::sqrt(-2.0 * std::log(s) / s);
                return {u * f, v * f};
            }
        }
    }

    void fill_standard_normal(std::span<double> out) {
        std::size_t i = 0;
        while (i + 1 < out.size()) {
            const auto [a, b] = normal_pair();
            out[i++] = a;
            out[i++] = b;
        }
        if (i < out.size()) out[i] = normal_pair().first;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace speclust
