#include "pse/reductions.hpp"

#include <algorithm>

#include "pse/analysis.hpp"
#include "pse/errors.hpp"

namespace pse {

std::string gadget_element(const std::string& g, const std::string& p) {
    return "(" + g + "," + p + ")";
}

namespace {

void validate_spec(const GadgetSpec& spec) {
    int k = spec.p.size();
    int prev = 0;
    for (int x : spec.x) {
        if (x < 1 || x >= k) throw ValidationError("gadget: X index out of range");
        if (x <= prev) throw ValidationError("gadget: X indices must be strictly increasing");
        prev = x;
    }
    if (spec.g.index_of(spec.s) < 0) throw ValidationError("gadget: unknown vertex s");
    if (spec.g.index_of(spec.t) < 0) throw ValidationError("gadget: unknown vertex t");
}

} // namespace

Structure build_B(const GadgetSpec& spec) {
    validate_spec(spec);
    const RootedPathStructure& p = spec.p;
    const Graph& g = spec.g;
    int k = p.size();

    std::vector<std::string> universe;
    universe.reserve(static_cast<size_t>(g.size()) * static_cast<size_t>(k));
    for (const std::string& gv : g.vertices())
        for (const std::string& pv : p.enumeration()) universe.push_back(gadget_element(gv, pv));

    std::set<int> x_set(spec.x.begin(), spec.x.end());
    int i1 = spec.x.empty() ? 0 : spec.x.front();

    // position of each P element in the enumeration, 1-based
    std::map<std::string, int> pos;
    for (int i = 1; i <= k; ++i) pos[p.point(i)] = i;

    RelationMap relations;
    relations[kRootSymbol] = {{gadget_element(spec.s, p.point(1))}};

    for (const auto& [symbol, tuples] : p.base().relations()) {
        if (symbol == kRootSymbol) continue;
        auto& out = relations[symbol];
        for (const Tuple& q : tuples) {
            // columns the tuple touches; a path tuple has at most two,
            // and they are adjacent enumeration positions
            int lo = k + 1, hi = 0;
            for (const std::string& e : q) {
                lo = std::min(lo, pos[e]);
                hi = std::max(hi, pos[e]);
            }
            if (hi - lo > 1) continue; // cannot happen on a path structure

            // candidate cut positions i with all components in {p_i, p_{i+1}}
            std::vector<int> cuts;
            if (lo < hi) {
                cuts.push_back(lo);
            } else {
                if (lo >= 2) cuts.push_back(lo - 1); // the tuple sits in column p_{i+1}
                if (lo <= k - 1) cuts.push_back(lo); // the tuple sits in column p_i
            }

            for (int i : cuts) {
                bool uses_lowcol = false, uses_highcol = false;
                for (const std::string& e : q) {
                    if (pos[e] == i) uses_lowcol = true;
                    if (pos[e] == i + 1) uses_highcol = true;
                }
                bool edge_in_x = x_set.count(i) != 0;

                // gi plays g (column p_i), gj plays g' (column p_{i+1}); a
                // role not appearing in the tuple is existentially
                // quantified, so its checks are vacuous
                int gi_limit = uses_lowcol ? g.size() : 1;
                int gj_limit = uses_highcol ? g.size() : 1;
                for (int gi = 0; gi < gi_limit; ++gi) {
                    for (int gj = 0; gj < gj_limit; ++gj) {
                        if (uses_highcol && i + 1 == k && g.vertex(gj) != spec.t) continue;
                        if (uses_lowcol && !spec.x.empty() && i == i1 && g.vertex(gi) != spec.s)
                            continue;
                        if (uses_lowcol && uses_highcol && gi != gj) {
                            if (!edge_in_x || !g.has_edge(gi, gj)) continue;
                        }
                        Tuple image;
                        image.reserve(q.size());
                        for (const std::string& e : q)
                            image.push_back(gadget_element(
                                pos[e] == i ? g.vertex(gi) : g.vertex(gj), e));
                        out.insert(std::move(image));
                    }
                }
            }
        }
    }

    return Structure::validate(p.base().vocabulary(), std::move(universe), std::move(relations));
}

std::vector<int> select_X_case1(const RootedPathStructure& p, long l) {
    auto unf = unfoldable_edges(p);
    if (static_cast<long>(unf.size()) < l)
        throw PreconditionError("select_X_case1: fewer than l unfoldable edges");
    std::vector<int> x;
    for (long j = 0; j < l; ++j) x.push_back(unf[static_cast<size_t>(j)] - 1);
    return x;
}

std::vector<int> select_X_case2(const RootedPathStructure& p, long l) {
    for (int i = 1; i < p.size(); ++i) {
        if (is_unfoldable(p, i, static_cast<int>(l))) {
            std::vector<int> x;
            for (long j = l; j >= 1; --j) x.push_back(i - static_cast<int>(j));
            return x;
        }
    }
    throw PreconditionError("select_X_case2: no edge unfoldable of degree l");
}

StructureSupply family_supply(int id, int start_size) {
    return [id, start_size](int attempt) -> std::optional<RootedPathStructure> {
        return gen_family(id, start_size + attempt);
    };
}

std::pair<RootedPathStructure, Structure> reduce_ustcon(const Graph& g, const std::string& s,
                                                        const std::string& t, long l,
                                                        const StructureSupply& supply,
                                                        int case_no, int scan_limit) {
    if (case_no != 1 && case_no != 2)
        throw PreconditionError("reduce_ustcon: case must be 1 or 2");
    for (int attempt = 0; attempt < scan_limit; ++attempt) {
        auto p = supply(attempt);
        if (!p) break;
        std::vector<int> x;
        if (case_no == 1) {
            if (static_cast<long>(unfoldable_edges(*p).size()) < l) continue;
            x = select_X_case1(*p, l);
        } else {
            bool found = false;
            for (int i = 1; i < p->size() && !found; ++i)
                found = is_unfoldable(*p, i, static_cast<int>(l));
            if (!found) continue;
            x = select_X_case2(*p, l);
        }
        GadgetSpec spec{g, *p, std::move(x), s, t};
        return {*p, build_B(spec)};
    }
    throw PreconditionError("reduce_ustcon: supply exhausted without a suitable structure");
}

RootedPathStructure make_P_kl(long k, long l) {
    if (k < 0 || k >= l) throw PreconditionError("make_P_kl: need 0 <= k < l");
    std::vector<std::string> universe;
    for (long i = 1; i <= l + 1; ++i) universe.push_back("p" + std::to_string(i));
    RelationMap relations;
    relations[kRootSymbol] = {{universe[0]}};
    auto& e = relations["E"];
    for (long i = 1; i <= l; ++i) {
        const std::string& a = universe[static_cast<size_t>(i - 1)];
        const std::string& b = universe[static_cast<size_t>(i)];
        if (i == k + 1) {
            e.insert({a, b});
        } else {
            e.insert({a, b});
            e.insert({b, a});
        }
    }
    Vocabulary vocab = Vocabulary::make({{kRootSymbol, 1}, {"E", 2}});
    return as_rooted_path(Structure::validate(vocab, std::move(universe), std::move(relations)));
}

std::pair<RootedPathStructure, Structure> reduce_longshort(const Graph& g, const std::string& s,
                                                           const std::string& t, long k, long l) {
    if (g.index_of(s) < 0) throw ValidationError("reduce_longshort: unknown vertex s");
    if (g.index_of(t) < 0) throw ValidationError("reduce_longshort: unknown vertex t");
    if (k < 0 || k >= l) throw PreconditionError("reduce_longshort: need 0 <= k < l");

    std::vector<std::string> universe = g.vertices();
    std::vector<std::string> tail;
    for (long i = 1; i <= l - k; ++i) {
        std::string q = "q" + std::to_string(i);
        while (g.index_of(q) >= 0) q += "_"; // avoid clashes with vertex names
        tail.push_back(q);
        universe.push_back(q);
    }

    RelationMap relations;
    relations[kRootSymbol] = {{s}};
    auto& e = relations["E"];
    for (const auto& [u, v] : g.edges()) {
        e.insert({g.vertex(u), g.vertex(v)});
        e.insert({g.vertex(v), g.vertex(u)});
    }
    e.insert({t, tail[0]}); // directed: no way back from the tail
    for (size_t i = 0; i + 1 < tail.size(); ++i) {
        e.insert({tail[i], tail[i + 1]});
        e.insert({tail[i + 1], tail[i]});
    }

    Vocabulary vocab = Vocabulary::make({{kRootSymbol, 1}, {"E", 2}});
    Structure gprime = Structure::validate(vocab, std::move(universe), std::move(relations));
    return {make_P_kl(k, l), std::move(gprime)};
}

namespace {

// forward = (p_i, p_{i+1}) in E
RootedPathStructure path_from_directions(const std::vector<int>& dirs) {
    // dirs[i]: 0 forward, 1 backward, 2 both
    long k = static_cast<long>(dirs.size()) + 1;
    std::vector<std::string> universe;
    for (long i = 1; i <= k; ++i) universe.push_back("p" + std::to_string(i));
    RelationMap relations;
    relations[kRootSymbol] = {{universe[0]}};
    auto& e = relations["E"];
    for (size_t i = 0; i + 1 < universe.size(); ++i) {
        const std::string& a = universe[i];
        const std::string& b = universe[i + 1];
        if (dirs[i] == 0 || dirs[i] == 2) e.insert({a, b});
        if (dirs[i] == 1 || dirs[i] == 2) e.insert({b, a});
    }
    Vocabulary vocab = Vocabulary::make({{kRootSymbol, 1}, {"E", 2}});
    return as_rooted_path(Structure::validate(vocab, std::move(universe), std::move(relations)));
}

} // namespace

RootedPathStructure gen_family(int id, int size) {
    if (size < 3) throw PreconditionError("gen_family: size must be >= 3");
    int edges = size - 1;
    std::vector<int> dirs(static_cast<size_t>(edges));
    switch (id) {
    case 1:
        // alternating: p1 -> p2 <- p3 -> p4 ...
        for (int i = 1; i <= edges; ++i) dirs[static_cast<size_t>(i - 1)] = (i % 2 == 1) ? 0 : 1;
        break;
    case 2:
        // each alternating edge subdivided: both halves keep its direction
        for (int i = 1; i <= edges; ++i) {
            int original = (i + 1) / 2;
            dirs[static_cast<size_t>(i - 1)] = (original % 2 == 1) ? 0 : 1;
        }
        break;
    case 3:
        // alternating, with the final edge repeating the previous direction
        for (int i = 1; i <= edges - 1; ++i) dirs[static_cast<size_t>(i - 1)] = (i % 2 == 1) ? 0 : 1;
        dirs[static_cast<size_t>(edges - 1)] = ((edges - 1) % 2 == 1) ? 0 : 1;
        break;
    case 4: {
        // undirected prefix, then an alternating tail, split evenly
        int undirected = (edges + 1) / 2;
        for (int i = 1; i <= undirected; ++i) dirs[static_cast<size_t>(i - 1)] = 2;
        for (int i = undirected + 1; i <= edges; ++i)
            dirs[static_cast<size_t>(i - 1)] = ((i - undirected) % 2 == 1) ? 0 : 1;
        break;
    }
    default:
        throw PreconditionError("gen_family: id must be 1..4");
    }
    return path_from_directions(dirs);
}

} // namespace pse
