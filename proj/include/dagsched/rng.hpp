/*
Copyright 2026 The dagsched Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace dagsched {

/// Seeded random stream. The engine is std::mt19937_64; the distribution
/// transforms are written out explicitly so that sampled values are
/// bit-identical across standard library implementations, which the
/// reproducibility contracts rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1): 53 random mantissa bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Modulo bias is irrelevant for our n << 2^64.
    std::uint64_t uniform_index(std::uint64_t n) { return engine_() % n; }

    /// Standard normal via Box-Muller (one value per call, no state carried).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Exponential with the given mean, via inverse CDF.
    double exponential(double mean) {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return -mean * std::log(u);
    }

    /// Lognormal multiplier with mean 1 and coefficient of variation cv.
    double lognormal_unit_mean(double cv) {
        if (cv <= 0.0) return 1.0;
        const double sigma2 = std::log1p(cv * cv);
        const double mu = -0.5 * sigma2;
        return std::exp(mu + std::sqrt(sigma2) * normal());
    }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent substream seed from a root seed and a path of
/// tags (iteration number, worker index, ...). Splitmix64 finalizer rounds.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t s = mix(seed);
    for (std::uint64_t tag : path) s = mix(s ^ mix(tag));
    return s;
}

}  // namespace dagsched
