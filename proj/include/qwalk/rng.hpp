#ifndef QWALK_RNG_HPP
#define QWALK_RNG_HPP

#include <cstdint>
#include <random>

namespace qwalk {

// Seedable generator with portable output. mt19937_64 is specified
// bit-exactly by the standard; the distributions below avoid
// std::uniform_*_distribution, whose streams differ between standard
// library implementations. Trajectories are therefore reproducible
// across platforms given (seed, graph, params).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, bound), bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        // 2^64 mod bound, computed in 64-bit arithmetic
        const std::uint64_t rem = (-bound) % bound;
        std::uint64_t r = engine_();
        while (r < rem) {
            r = engine_();
        }
        return r % bound;
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qwalk

#endif
