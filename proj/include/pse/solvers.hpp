#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pse/graph.hpp"
#include "pse/rooted_path.hpp"
#include "pse/structure.hpp"

namespace pse {

using Assignment = std::map<std::string, std::string>;

/// h is a homomorphism iff it maps every relation tuple into the target
/// relation; an embedding is an injective homomorphism.
bool is_homomorphism(const Structure& a, const Structure& b, const Assignment& h);
bool is_embedding(const Structure& a, const Structure& b, const Assignment& h);

/// Pair-type view of the homomorphism condition: atyp(pair) included in
/// atyp(image pair) for every ordered pair. Equivalent to the tuple form
/// whenever every tuple of `a` has at most two distinct components.
bool preserves_pair_types(const Structure& a, const Structure& b, const Assignment& h);

/// Exhaustive embedding search. Deterministic: assigns a's universe in
/// order, trying b's universe in order, so the first hit is the
/// lexicographically least. Throws on vocabulary mismatch.
std::optional<Assignment> brute_force_embedding(const Structure& a, const Structure& b);

/// Exhaustive homomorphism search (not necessarily injective).
std::optional<Assignment> brute_force_homomorphism(const Structure& a, const Structure& b);

/// Is there a simple path of length at most l connecting s and t?
bool solve_ustcon(const Graph& g, const std::string& s, const std::string& t, long l);

struct LongShortInstance {
    Graph graph;
    std::string s;
    std::string t;
    long k = 0;
    long l = 1;
};

/// Validates s,t membership and 0 <= k < l.
LongShortInstance make_longshort_instance(Graph g, std::string s, std::string t, long k, long l);

/// Depth-bounded exhaustive simple-path search.
bool has_path_at_least(const Graph& g, int s, long l);
bool has_exact_path(const Graph& g, int s, int t, long k);

/// Is there a simple path of length >= l with endpoint s, or a simple
/// path of length exactly k connecting s and t?
bool solve_longshort(const LongShortInstance& inst);

using LongShortOracle =
    std::function<bool(const Graph&, const std::string& s, const std::string& t, long k, long l)>;

/// The exact oracle backed by solve_longshort.
LongShortOracle default_longshort_oracle();

/// Graph G(f,b1) of the color-coded loop: vertices are B's universe
/// without b1; the symmetric closure of the ordered pairs (b,b') with
///   f(b)+1 = f(b') and atyp(e_2^{-f(b)},P) included in atyp((b,b'),B),
///   and, when f(b)=2, atyp(e_1,P) included in atyp((b1,b),B).
/// `coloring` maps B universe positions to colors in {2..k}.
Graph color_graph_A(const RootedPathStructure& p, const Structure& b,
                    const std::vector<int>& coloring, const std::string& b1);

/// Graph G(f,h) of the alternating-tail algorithm: vertices are B's
/// universe without h(p_1)..h(p_{C-1}); edges are the symmetric closure
/// of those (b,b') in E^B with |f(b)-f(b')| = 1, (p_{f(b)},p_{f(b')}) in
/// E^P, and any color-C endpoint equal to h(p_C).
/// `prefix_images` lists h(p_1)..h(p_C); colors live in {C..k}.
Graph color_graph_tail(const RootedPathStructure& p, const Structure& b,
                       const std::vector<int>& coloring,
                       const std::vector<std::string>& prefix_images);

struct SolverConfig {
    /// Structures larger than this use brute force instead of the color
    /// coded loops, whose color-function enumeration is exponential in k^2.
    int k_max = 4;
    /// Widens the hash-family prime bound (see enumerate_hashes).
    int log_multiplier = 1;
};

struct SolverStats {
    long brute_force_calls = 0;
    long hash_fallbacks = 0;   // brute force forced by an incomplete hash family
    long first_loop_accepts = 0;
    long second_loop_accepts = 0;
    long oracle_queries = 0;
    long witnesses_checked = 0; // embeddings extracted from accepting color-coded runs
    long witnesses_valid = 0;
    int max_depth = 0;
};

/// Decides whether P embeds into B, recursing on cuts of P and querying
/// the long-short oracle from the color-coded loop. Exact: agrees with
/// brute_force_embedding on every input.
bool algorithm_AC(const RootedPathStructure& p, const Structure& b, const LongShortOracle& oracle,
                  const SolverConfig& cfg = {}, SolverStats* stats = nullptr);

/// Decides whether a rooted oriented path with a C-alternating tail
/// embeds into B. Throws PreconditionError when P is not a rooted
/// oriented path with a C-alternating tail.
bool algorithm_B(const RootedPathStructure& p, const Structure& b, int c,
                 const SolverConfig& cfg = {}, SolverStats* stats = nullptr);

} // namespace pse
