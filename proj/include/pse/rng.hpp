#pragma once

#include <cstdint>
#include <vector>

namespace pse {

/// Deterministic 64-bit generator (splitmix64). std::mt19937 plus the
/// standard distributions would leave instance streams implementation
/// defined; seeded verification runs must be reproducible everywhere,
/// so both the generator and the bounded draws are pinned here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling keeps the draw unbiased
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    /// Uniform draw from [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Sample k distinct values from [0, n) in increasing order.
    std::vector<long> sample(long n, long k) {
        std::vector<long> out;
        long need = k;
        for (long i = 0; i < n && need > 0; ++i) {
            if (below(static_cast<std::uint64_t>(n - i)) < static_cast<std::uint64_t>(need)) {
                out.push_back(i);
                --need;
            }
        }
        return out;
    }

private:
    std::uint64_t state_;
};

} // namespace pse
