#pragma once

#include <cstdint>
#include <random>

namespace mvdr {

// Deterministic uniform generator. Doubles are derived from the raw mt19937_64
// stream with fixed arithmetic instead of std::uniform_real_distribution, whose
// output sequence is implementation-defined; same seed gives the same stream on
// every platform.
class UniformRng {
public:
    explicit UniformRng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double next(double lo, double hi) { return lo + (hi - lo) * next(); }

    // {0, ..., n-1}
    int next_int(int n) {
        int v = static_cast<int>(next() * n);
        return v < n ? v : n - 1;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace mvdr
