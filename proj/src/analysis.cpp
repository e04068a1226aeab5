#include "pse/analysis.hpp"

#include <algorithm>

#include "pse/errors.hpp"

namespace pse {

bool is_unfoldable(const RootedPathStructure& p, int i, int d) {
    if (i < 1 || i >= p.size())
        throw PreconditionError("is_unfoldable: edge index out of range");
    if (d < 0) throw PreconditionError("is_unfoldable: negative degree");
    if (i <= d) return false;
    AtomicType ei = p.edge_type(i);
    for (int l = 1; l <= d; ++l)
        if (ei.subset_of(p.edge_power_type(i - l, l))) return false;
    return true;
}

int max_degree(const RootedPathStructure& p, int i) {
    // degree-d unfoldability implies all smaller degrees, so scan up
    int d = 0;
    while (is_unfoldable(p, i, d + 1)) ++d;
    return d;
}

long unfoldability_degree(const RootedPathStructure& p) {
    long sum = 0;
    for (int i = 1; i < p.size(); ++i) sum += max_degree(p, i);
    return sum;
}

std::vector<int> unfoldable_edges(const RootedPathStructure& p) {
    std::vector<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (is_unfoldable(p, i, 1)) out.push_back(i);
    return out;
}

std::vector<int> critical_edges(const RootedPathStructure& p) {
    std::vector<int> out;
    for (int i = 2; i < p.size(); ++i)
        if (p.edge_type(i) != p.edge_power_type(i - 1, 1)) out.push_back(i);
    return out;
}

long critical_bound(long c, long t) { return c + t * (c + 1); }

long two_var_atom_count(const Vocabulary& vocab) {
    long count = 1; // equality
    for (const auto& [name, arity] : vocab.symbols()) count += 1L << arity;
    return count;
}

bool is_rooted_oriented_path(const RootedPathStructure& p) {
    const Vocabulary& v = p.base().vocabulary();
    if (v.symbols().size() != 2 || !v.has(kRootSymbol) || !v.has("E") || v.arity("E") != 2)
        throw PreconditionError("is_rooted_oriented_path: vocabulary must be {root, E}");
    const auto& e = p.base().relation("E");
    size_t expected = 0;
    for (int i = 1; i < p.size(); ++i) {
        auto [a, b] = p.edge(i);
        bool fwd = e.count({a, b}) != 0;
        bool bwd = e.count({b, a}) != 0;
        if (fwd == bwd) return false; // exactly one direction
        ++expected;
    }
    return e.size() == expected; // no loops, no other pairs
}

int alternating_tail_constant(const RootedPathStructure& p) {
    if (!is_rooted_oriented_path(p))
        throw PreconditionError("alternating_tail_constant: not a rooted oriented path");
    int last_unfoldable = 0;
    for (int i = 1; i < p.size(); ++i)
        if (is_unfoldable(p, i, 1)) last_unfoldable = i;
    return last_unfoldable + 1;
}

AnalysisReport analyze(const RootedPathStructure& p) {
    AnalysisReport r;
    for (int i = 1; i < p.size(); ++i) {
        int d = max_degree(p, i);
        r.per_edge_degree.push_back(d);
        r.unfoldability_degree += d;
        if (d >= 1) r.unfoldable_edges.push_back(i);
        r.max_edge_degree = std::max(r.max_edge_degree, d);
    }
    r.critical_edges = critical_edges(p);
    const Vocabulary& v = p.base().vocabulary();
    bool vocab_ok =
        v.symbols().size() == 2 && v.has(kRootSymbol) && v.has("E") && v.arity("E") == 2;
    if (vocab_ok && is_rooted_oriented_path(p))
        r.alternating_tail_C = alternating_tail_constant(p);
    return r;
}

ClassifyReport classify(const std::vector<RootedPathStructure>& sample, long bound) {
    if (sample.empty()) throw PreconditionError("classify: empty sample");
    ClassifyReport out;
    out.bound = bound;
    bool within = true;
    bool all_oriented = true;
    int common_tail = 1;
    for (const auto& p : sample) {
        AnalysisReport r = analyze(p);
        within = within && r.unfoldability_degree <= bound;
        if (r.alternating_tail_C)
            common_tail = std::max(common_tail, *r.alternating_tail_C);
        else
            all_oriented = false;
        out.reports.push_back(std::move(r));
    }
    out.verdict = within ? "within bound" : "exceeds bound";
    out.all_oriented = all_oriented;
    if (all_oriented) {
        out.common_tail_constant = common_tail;
        out.common_tail_within_bound = common_tail <= bound;
    }
    return out;
}

} // namespace pse
