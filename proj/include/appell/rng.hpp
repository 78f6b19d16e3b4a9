#ifndef APPELL_RNG_HPP
#define APPELL_RNG_HPP

#include <cstdint>

namespace appell {

// Counter-based pseudo-random generator (splitmix64 of seed XOR counter).
// Produces an identical stream for a given seed on every platform, unlike the
// standard-library distributions whose output is implementation-defined.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (++counter_);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw on [lo, hi) using the top 53 bits of the stream.
    double uniform(double lo, double hi) {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    // Uniform integer on {lo, ..., hi} inclusive.
    long long uniform_int(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next_u64() % span);
    }

    bool coin() { return (next_u64() & 1u) != 0; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace appell

#endif
