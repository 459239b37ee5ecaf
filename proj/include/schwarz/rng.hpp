// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "schwarz/types.hpp"

namespace schwarz {

/// splitmix64 stream.  Every random draw in the library goes through this
/// class so that results are reproducible bit-for-bit for a given seed,
/// independent of platform RNG facilities and thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in {0, ..., n-1}.  Modulo bias is irrelevant at the sizes used
    /// here and keeps the draw count deterministic.
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(next_u64() % n);
    }

    /// Uniform in the open disk of the given radius, by rejection from the
    /// bounding square.  Avoids transcendental functions entirely.
    Complex next_in_disk(double radius = 1.0) {
        for (;;) {
            double x = 2.0 * next_unit() - 1.0;
            double y = 2.0 * next_unit() - 1.0;
            if (x * x + y * y < 1.0) return Complex(radius * x, radius * y);
        }
    }

    /// Uniformly distributed point on the unit circle.
    Complex next_phase() {
        for (;;) {
            double x = 2.0 * next_unit() - 1.0;
            double y = 2.0 * next_unit() - 1.0;
            double r2 = x * x + y * y;
            if (r2 >= 0.01 && r2 < 1.0) {
                double inv = 1.0 / std::sqrt(r2);
                return Complex(x * inv, y * inv);
            }
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace schwarz
