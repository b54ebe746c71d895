#pragma once

#include <cstdint>

namespace dc {

// Deterministic generator used for every random draw in the project.
// SplitMix64: fixed, documented mixing so that reports are reproducible
// across platforms and worker counts.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

  private:
    std::uint64_t state_;
};

// Per-trial seed derived from a master seed: trials may run in any order or
// in parallel and still draw identical streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master ^ (0xa5a5a5a5a5a5a5a5ULL + index * 0x9e3779b97f4a7c15ULL));
    g.next();
    return g.next();
}

} // namespace dc
