#pragma once

#include "levelset/common.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace levelset {

// Seeded random source for samplers. mt19937_64 is fully specified by the
// standard and the uniform/normal mappings below avoid the distribution
// classes, whose streams are implementation-defined; replications that reuse
// a seed therefore reproduce bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    Scalar uniform() { return static_cast<Scalar>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Marsaglia's polar method, one cached spare.
    Scalar normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        Scalar u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const Scalar factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        has_spare_ = true;
        return u * factor;
    }

    // Uniform index in [0, n) by rejection; unbiased for any n >= 1.
    Index uniform_index(Index n) {
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<Index>(x % un);
    }

private:
    std::mt19937_64 engine_;
    Scalar spare_ = 0;
    bool has_spare_ = false;
};

} // namespace levelset
