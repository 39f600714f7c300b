#pragma once

#include <cstdint>
#include <random>

namespace tutteforge {

// Seeded generator with portable bounded draws. std::mt19937_64's output
// sequence is pinned by the standard; the std distributions are not, so we
// roll our own small helpers to keep runs reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1.
    int below(int n) {
        std::uint64_t bound = static_cast<std::uint64_t>(n);
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return static_cast<int>(v % bound);
    }

    // Uniform in [lo, hi] inclusive.
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool chance(double p) {
        return static_cast<double>(next()) < p * 18446744073709551616.0;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace tutteforge
