// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace opconvex {

// The PRNG is part of the external contract: golden files and verification
// reports are reproducible only if the generator and the draw order are
// pinned. We use xoshiro256++ (Blackman & Vigna, public domain) seeded by
// expanding a 64-bit seed through splitmix64, the combination its authors
// recommend.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : x_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (x_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t x_;
};

class Xoshiro256PlusPlus {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256PlusPlus(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    // Deterministic per-trial stream: trial t of a run with seed s draws from
    // Xoshiro256PlusPlus(s XOR golden_gamma * (t + 1)). Trials are therefore
    // independent of execution order.
    static Xoshiro256PlusPlus for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Xoshiro256PlusPlus(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via the Marsaglia polar method (no cached spare: each
    // call runs its own accept loop, keeping the stream position a pure
    // function of the call sequence).
    double normal() {
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        return u * std::sqrt(-2.0 * std::log(s) / s);
    }

    // Standard complex Gaussian, E|z|^2 = 1. Both polar outputs of one accept
    // loop are used, scaled to variance 1/2 per component.
    std::complex<double> complex_normal() {
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s) * 0x1.6a09e667f3bcdp-1; // 1/sqrt(2)
        return {u * m, v * m};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

} // namespace opconvex
