#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pse/graph.hpp"
#include "pse/rooted_path.hpp"
#include "pse/structure.hpp"

namespace pse {

/// Inputs of the gadget B(G,P,X,s,t): an undirected graph with two named
/// vertices, a rooted path structure, and a strictly increasing set X of
/// edge indices of P.
struct GadgetSpec {
    Graph g;
    RootedPathStructure p;
    std::vector<int> x; // edge indices, strictly increasing, each in [1, k-1]
    std::string s;
    std::string t;
};

/// The product-universe structure over G x P whose relations hold exactly
/// the tuples accepted by the eight-line membership procedure; root is
/// {(s,p_1)}. Element (g,p) is named "(g,p)".
Structure build_B(const GadgetSpec& spec);

/// Name of the gadget element for (g,p).
std::string gadget_element(const std::string& g, const std::string& p);

/// Case 1 selection: the edges immediately preceding the first l
/// unfoldable edges. Throws when P has fewer than l unfoldable edges.
std::vector<int> select_X_case1(const RootedPathStructure& p, long l);

/// Case 2 selection: with e_i the first edge unfoldable of degree l, the
/// l edges preceding it. Throws when no edge has degree l.
std::vector<int> select_X_case2(const RootedPathStructure& p, long l);

/// Yields candidate structures by attempt number; empty when exhausted.
using StructureSupply = std::function<std::optional<RootedPathStructure>(int attempt)>;

/// Supply drawing family `id` structures of sizes start_size, start_size+1, ...
StructureSupply family_supply(int id, int start_size = 3);

/// Maps a ustcon instance to an embedding instance (P, B(G,P,X,s,t)),
/// scanning the supply for a P meeting the case precondition for l.
std::pair<RootedPathStructure, Structure> reduce_ustcon(const Graph& g, const std::string& s,
                                                        const std::string& t, long l,
                                                        const StructureSupply& supply,
                                                        int case_no, int scan_limit = 256);

/// P_{k,l}: universe p_1..p_{l+1}, root p_1, symmetric edges everywhere
/// except the single directed edge (p_{k+1}, p_{k+2}). Requires 0 <= k < l.
RootedPathStructure make_P_kl(long k, long l);

/// Maps a long-short instance to (P_{k,l}, G') where G' extends G by the
/// rooted tail s, t -> q_1 -- q_2 -- ... -- q_{l-k}.
std::pair<RootedPathStructure, Structure> reduce_longshort(const Graph& g, const std::string& s,
                                                           const std::string& t, long k, long l);

/// The example families:
///   1 rooted alternating paths,
///   2 their edge subdivisions,
///   3 alternating paths with the final edge breaking the alternation,
///   4 undirected paths prolonged by alternating paths (split evenly).
/// `size` is the number of elements (>= 3).
RootedPathStructure gen_family(int id, int size);

} // namespace pse
