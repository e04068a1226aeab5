#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pse/rooted_path.hpp"

namespace pse {

/// Structural measures of one rooted path structure.
struct AnalysisReport {
    std::vector<int> per_edge_degree;      // d_1..d_{k-1}
    long unfoldability_degree = 0;         // sum of the above
    std::vector<int> unfoldable_edges;     // indices with degree >= 1
    std::vector<int> critical_edges;       // indices i > 1 with atyp(e_i) != atyp(e_{i-1}^{-1})
    int max_edge_degree = 0;
    std::optional<int> alternating_tail_C; // rooted oriented paths only
};

/// e_i is unfoldable of degree d iff i > d and, for every l in [d],
/// atyp(e_i) is not contained in atyp(e_{i-l}^{-l}).
bool is_unfoldable(const RootedPathStructure& p, int i, int d);

/// Largest d such that e_i is unfoldable of degree d. Well defined:
/// degree-d unfoldability implies every smaller degree.
int max_degree(const RootedPathStructure& p, int i);

/// Sum over edges of their maximal unfoldability degrees.
long unfoldability_degree(const RootedPathStructure& p);

/// Indices of edges unfoldable of degree 1, increasing.
std::vector<int> unfoldable_edges(const RootedPathStructure& p);

/// Indices i in {2..k-1} with atyp(e_i) != atyp(e_{i-1}^{-1}), increasing.
std::vector<int> critical_edges(const RootedPathStructure& p);

/// The bound C := c + t(c+1) on the number of critical edges, where c is
/// the unfoldable-edge count and t the two-variable atom count.
long critical_bound(long c, long t);

/// Number of atomic formulas in two variables: one per (symbol, pattern
/// over {1,2}^arity) plus the equality atom.
long two_var_atom_count(const Vocabulary& vocab);

/// True iff the vocabulary is exactly {root, E} and every consecutive
/// pair has exactly one direction in E, with no other pairs and no loops.
bool is_rooted_oriented_path(const RootedPathStructure& p);

/// Minimal C >= 1 such that every e_i with i >= C is foldable (not
/// unfoldable of degree 1); 1 when no edge is unfoldable.
/// Requires a rooted oriented path.
int alternating_tail_constant(const RootedPathStructure& p);

AnalysisReport analyze(const RootedPathStructure& p);

/// Sample classification against a degree bound. The verdict is relative
/// to the supplied sample and bound; no claim about the ambient class.
struct ClassifyReport {
    std::vector<AnalysisReport> reports;
    long bound = 0;
    std::string verdict;                            // "within bound" / "exceeds bound"
    bool all_oriented = false;
    std::optional<int> common_tail_constant;        // max of per-structure constants
    std::optional<bool> common_tail_within_bound;
};

ClassifyReport classify(const std::vector<RootedPathStructure>& sample, long bound);

} // namespace pse
