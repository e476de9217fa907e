#pragma once

#include <cstdint>

namespace qspin {

// SplitMix64 (Steele, Lea & Flood). One 64-bit word of state, fixed output
// for a fixed seed on every platform, and cheap to split into independent
// child streams. All disorder in the package flows through this generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [-1,1).
    double uniform_sym() { return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0; }

    // Seed of an independent child stream. Sweeps derive per-point seeds as
    //   derive(derive(derive(master, grid_index), ensemble_index), lane)
    // with lane 0 for bonds and lane 1 for fields, so a point's stream never
    // depends on execution order.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t lane) {
        SplitMix64 g(seed ^ (lane + 1) * 0xd1b54a32d192ed03ULL);
        g.next();
        return g.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace qspin
