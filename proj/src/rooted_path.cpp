#include "pse/rooted_path.hpp"

#include <set>

#include "pse/errors.hpp"

namespace pse {

std::pair<std::string, std::string> RootedPathStructure::edge(int i) const {
    if (i < 1 || i >= size())
        throw PreconditionError("rooted path: edge index out of range");
    return {enumeration_[static_cast<size_t>(i - 1)], enumeration_[static_cast<size_t>(i)]};
}

AtomicType RootedPathStructure::edge_type(int i) const {
    auto e = edge(i);
    return base_.atomic_type(e.first, e.second);
}

AtomicType RootedPathStructure::edge_power_type(int i, long l) const {
    auto e = edge_power(edge(i), l);
    return base_.atomic_type(e.first, e.second);
}

RootedPathStructure as_rooted_path(const Structure& s) {
    if (!s.vocabulary().has(kRootSymbol) || s.vocabulary().arity(kRootSymbol) != 1)
        throw ValidationError("bad root: vocabulary lacks unary 'root'");

    Graph g = gaifman(s);
    int n = g.size();

    // path test: connected, k-1 edges, maximum degree 2
    if (g.edge_count() != n - 1)
        throw ValidationError("not a path: Gaifman graph has " + std::to_string(g.edge_count()) +
                              " edges on " + std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v).size() > 2)
            throw ValidationError("not a path: branching at '" + g.vertex(v) + "'");
    for (int v = 1; v < n; ++v)
        if (!connected_idx(g, 0, v))
            throw ValidationError("not a path: Gaifman graph is disconnected");

    const auto& roots = s.relation(kRootSymbol);
    if (roots.size() != 1)
        throw ValidationError("bad root: root relation must be a singleton");
    const std::string& root = roots.begin()->front();
    int root_idx = s.index_of(root);
    if (n > 1 && g.neighbors(root_idx).size() != 1)
        throw ValidationError("bad root: '" + root + "' is not an endpoint");

    // walk the path from the root
    std::vector<std::string> enumeration{root};
    int prev = -1, cur = root_idx;
    while (static_cast<int>(enumeration.size()) < n) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) next = w;
        prev = cur;
        cur = next;
        enumeration.push_back(g.vertex(cur));
    }

    return RootedPathStructure(s, std::move(enumeration));
}

RootedPathStructure cut_down(const RootedPathStructure& p, int i) {
    if (i < 1 || i > p.size())
        throw PreconditionError("cut_down: index out of range");
    std::set<std::string> keep(p.enumeration().begin(), p.enumeration().begin() + i);
    return as_rooted_path(induced_substructure(p.base(), keep));
}

RootedPathStructure cut_up(const RootedPathStructure& p, int i) {
    if (i < 1 || i > p.size())
        throw PreconditionError("cut_up: index out of range");
    std::set<std::string> keep(p.enumeration().begin() + (i - 1), p.enumeration().end());
    return as_rooted_path(with_root(induced_substructure(p.base(), keep), p.point(i)));
}

} // namespace pse
