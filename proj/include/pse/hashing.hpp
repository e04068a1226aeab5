#pragma once

#include <optional>
#include <vector>

namespace pse {

/// One member of the color-coding hash family:
/// h_{p,q}(m) = (q*m mod p) mod range_size.
struct HashAssignment {
    long p = 2;
    long q = 0;
    long range_size = 1;

    long eval(long m) const { return ((q % p) * (m % p) % p) % range_size; }
};

long ceil_log2(long n);

/// All (p,q) with p prime, p < range_size * ceil(log2 n) * multiplier and
/// q < p, in increasing (p,q) order. The multiplier widens the family when
/// a different logarithm base is wanted; 1 matches the log2 reading.
std::vector<HashAssignment> enumerate_hashes(long n, long range_size, int multiplier = 1);

/// First member of the family injective on X (values from [n] = {1..n}).
std::optional<HashAssignment> find_injective_hash(const std::vector<long>& x, long n,
                                                  long range_size, int multiplier = 1);

/// Whether every subset of [n] of the given size admits an injective
/// member. Checked exhaustively (and cached) at desk scale; for domains
/// too large to enumerate the family is taken to be complete, which is
/// regime where completeness is guaranteed.
bool hash_family_complete(long n, int subset_size, long range_size, int multiplier = 1);

} // namespace pse
