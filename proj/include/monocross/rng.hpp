#pragma once

#include <cstdint>
#include <random>

namespace monocross {

// Thin wrapper around mt19937_64. The bounded draws are hand-rolled so a
// fixed seed replays the same sequence on every platform (the standard
// distributions are not pinned across library implementations).
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n <= 1 ? 0 : next() % n; }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

}  // namespace monocross
