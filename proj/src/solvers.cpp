#include "pse/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "pse/analysis.hpp"
#include "pse/errors.hpp"
#include "pse/hashing.hpp"

namespace pse {

bool is_homomorphism(const Structure& a, const Structure& b, const Assignment& h) {
    for (const std::string& e : a.universe()) {
        auto it = h.find(e);
        if (it == h.end() || !b.has_element(it->second)) return false;
    }
    for (const auto& [symbol, tuples] : a.relations()) {
        for (const Tuple& t : tuples) {
            Tuple image;
            image.reserve(t.size());
            for (const std::string& e : t) image.push_back(h.at(e));
            if (!b.has_tuple(symbol, image)) return false;
        }
    }
    return true;
}

bool is_embedding(const Structure& a, const Structure& b, const Assignment& h) {
    std::set<std::string> images;
    for (const std::string& e : a.universe()) {
        auto it = h.find(e);
        if (it == h.end() || !images.insert(it->second).second) return false;
    }
    return is_homomorphism(a, b, h);
}

bool preserves_pair_types(const Structure& a, const Structure& b, const Assignment& h) {
    for (const std::string& x : a.universe())
        for (const std::string& y : a.universe())
            if (!a.atomic_type(x, y).subset_of(b.atomic_type(h.at(x), h.at(y)))) return false;
    return true;
}

namespace {

struct GroundedTuple {
    const std::string* symbol;
    std::vector<int> positions; // a-universe positions of the components
};

// Tuples bucketed by their largest universe position, so each backtracking
// step checks exactly the constraints it completes.
std::vector<std::vector<GroundedTuple>> tuples_by_max_position(const Structure& a) {
    std::vector<std::vector<GroundedTuple>> by_max(static_cast<size_t>(a.size()));
    for (const auto& [symbol, tuples] : a.relations()) {
        for (const Tuple& t : tuples) {
            GroundedTuple g{&symbol, {}};
            int maxpos = 0;
            for (const std::string& e : t) {
                int pos = a.index_of(e);
                g.positions.push_back(pos);
                maxpos = std::max(maxpos, pos);
            }
            by_max[static_cast<size_t>(maxpos)].push_back(std::move(g));
        }
    }
    return by_max;
}

std::optional<Assignment> brute_force_map(const Structure& a, const Structure& b, bool injective) {
    if (!(a.vocabulary() == b.vocabulary()))
        throw PreconditionError("brute force: vocabulary mismatch");

    auto by_max = tuples_by_max_position(a);
    std::vector<int> img(static_cast<size_t>(a.size()), -1);
    std::vector<char> used(static_cast<size_t>(b.size()), 0);
    Tuple image;

    auto tuples_ok = [&](int pos) {
        for (const GroundedTuple& g : by_max[static_cast<size_t>(pos)]) {
            image.clear();
            for (int p : g.positions)
                image.push_back(b.universe()[static_cast<size_t>(img[static_cast<size_t>(p)])]);
            if (!b.has_tuple(*g.symbol, image)) return false;
        }
        return true;
    };

    std::optional<Assignment> result;
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == a.size()) {
            Assignment out;
            for (int i = 0; i < a.size(); ++i)
                out[a.universe()[static_cast<size_t>(i)]] =
                    b.universe()[static_cast<size_t>(img[static_cast<size_t>(i)])];
            result = std::move(out);
            return true;
        }
        for (int cand = 0; cand < b.size(); ++cand) {
            if (injective && used[static_cast<size_t>(cand)]) continue;
            img[static_cast<size_t>(pos)] = cand;
            used[static_cast<size_t>(cand)] = 1;
            if (tuples_ok(pos) && self(self, pos + 1)) return true;
            img[static_cast<size_t>(pos)] = -1;
            used[static_cast<size_t>(cand)] = 0;
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

} // namespace

std::optional<Assignment> brute_force_embedding(const Structure& a, const Structure& b) {
    if (a.size() > b.size()) return std::nullopt;
    return brute_force_map(a, b, true);
}

std::optional<Assignment> brute_force_homomorphism(const Structure& a, const Structure& b) {
    return brute_force_map(a, b, false);
}

bool solve_ustcon(const Graph& g, const std::string& s, const std::string& t, long l) {
    int si = g.index_of(s), ti = g.index_of(t);
    if (si < 0) throw ValidationError("ustcon: unknown vertex '" + s + "'");
    if (ti < 0) throw ValidationError("ustcon: unknown vertex '" + t + "'");
    long dist = bfs_distance_idx(g, si, ti);
    return dist >= 0 && dist <= l;
}

LongShortInstance make_longshort_instance(Graph g, std::string s, std::string t, long k, long l) {
    if (g.index_of(s) < 0) throw ValidationError("longshort: unknown vertex '" + s + "'");
    if (g.index_of(t) < 0) throw ValidationError("longshort: unknown vertex '" + t + "'");
    if (k < 0 || k >= l) throw ValidationError("longshort: need 0 <= k < l");
    return LongShortInstance{std::move(g), std::move(s), std::move(t), k, l};
}

namespace {

bool dfs_long(const Graph& g, int v, long depth, long l, std::vector<char>& visited) {
    if (depth == l) return true;
    for (int w : g.neighbors(v)) {
        if (visited[static_cast<size_t>(w)]) continue;
        visited[static_cast<size_t>(w)] = 1;
        if (dfs_long(g, w, depth + 1, l, visited)) return true;
        visited[static_cast<size_t>(w)] = 0;
    }
    return false;
}

bool dfs_exact(const Graph& g, int v, int t, long depth, long k, std::vector<char>& visited) {
    if (depth == k) return v == t;
    for (int w : g.neighbors(v)) {
        if (visited[static_cast<size_t>(w)]) continue;
        visited[static_cast<size_t>(w)] = 1;
        if (dfs_exact(g, w, t, depth + 1, k, visited)) return true;
        visited[static_cast<size_t>(w)] = 0;
    }
    return false;
}

} // namespace

bool has_path_at_least(const Graph& g, int s, long l) {
    if (l <= 0) return true;
    std::vector<char> visited(static_cast<size_t>(g.size()), 0);
    visited[static_cast<size_t>(s)] = 1;
    return dfs_long(g, s, 0, l, visited);
}

bool has_exact_path(const Graph& g, int s, int t, long k) {
    std::vector<char> visited(static_cast<size_t>(g.size()), 0);
    visited[static_cast<size_t>(s)] = 1;
    return dfs_exact(g, s, t, 0, k, visited);
}

bool solve_longshort(const LongShortInstance& inst) {
    int s = inst.graph.index_of(inst.s), t = inst.graph.index_of(inst.t);
    return has_path_at_least(inst.graph, s, inst.l) || has_exact_path(inst.graph, s, t, inst.k);
}

LongShortOracle default_longshort_oracle() {
    return [](const Graph& g, const std::string& s, const std::string& t, long k, long l) {
        return solve_longshort(make_longshort_instance(g, s, t, k, l));
    };
}

// ---------------------------------------------------------------------------
// color-coded machinery
// ---------------------------------------------------------------------------

namespace {

// Distinct colorings g o h_{p,q} : positions of [n] -> {lo..hi}, where g
// ranges over all functions from the hash range and (p,q) over the family.
// Only the partition of [n] into hash classes matters, so colorings are
// enumerated per distinct partition and deduplicated.
std::vector<std::vector<int>> realizable_colorings(long n, int lo, int hi, int multiplier) {
    int colors = hi - lo + 1;
    long range = static_cast<long>(colors) * colors;
    auto hashes = enumerate_hashes(n, range, multiplier);

    std::set<std::vector<int>> seen_partitions;
    std::vector<std::vector<int>> partitions; // canonical class labels per position
    bool have_discrete = false;
    for (const HashAssignment& h : hashes) {
        std::vector<int> label(static_cast<size_t>(n));
        std::map<long, int> renumber;
        for (long m = 1; m <= n; ++m) {
            long v = h.eval(m);
            auto [it, fresh] = renumber.emplace(v, static_cast<int>(renumber.size()));
            label[static_cast<size_t>(m - 1)] = it->second;
        }
        if (static_cast<long>(renumber.size()) == n) {
            // a hash injective on all of [n] realizes every coloring
            partitions.clear();
            partitions.push_back(std::move(label));
            have_discrete = true;
            break;
        }
        if (seen_partitions.insert(label).second) partitions.push_back(std::move(label));
    }

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    std::vector<int> f(static_cast<size_t>(n));
    for (const auto& label : partitions) {
        int classes = *std::max_element(label.begin(), label.end()) + 1;
        std::vector<int> assign(static_cast<size_t>(classes), lo);
        for (;;) {
            for (long m = 0; m < n; ++m)
                f[static_cast<size_t>(m)] = assign[static_cast<size_t>(label[static_cast<size_t>(m)])];
            if (have_discrete || seen.insert(f).second) out.push_back(f);
            // next assignment, lexicographic
            int pos = classes - 1;
            while (pos >= 0 && assign[static_cast<size_t>(pos)] == hi) {
                assign[static_cast<size_t>(pos)] = lo;
                --pos;
            }
            if (pos < 0) break;
            ++assign[static_cast<size_t>(pos)];
        }
    }
    return out;
}

// Injective pair-type-preserving images of p_1..p_a; equivalent to the
// embeddings of the cut P|a since path-structure tuples have at most two
// distinct components. Callback returns true to stop the enumeration.
bool for_each_prefix_embedding(const RootedPathStructure& p, const PairTypeTable& tp,
                               const Structure& b, const PairTypeTable& tb, int a,
                               const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> ppos(static_cast<size_t>(a));
    for (int j = 0; j < a; ++j) ppos[static_cast<size_t>(j)] = p.base().index_of(p.point(j + 1));

    std::vector<int> img(static_cast<size_t>(a), -1);
    std::vector<char> used(static_cast<size_t>(b.size()), 0);

    auto rec = [&](auto&& self, int j) -> bool {
        if (j == a) return fn(img);
        int pj = ppos[static_cast<size_t>(j)];
        for (int cand = 0; cand < b.size(); ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            if (!tp.at(pj, pj).subset_of(tb.at(cand, cand))) continue;
            bool ok = true;
            for (int x = 0; x < j && ok; ++x) {
                int px = ppos[static_cast<size_t>(x)];
                int bx = img[static_cast<size_t>(x)];
                ok = tp.at(px, pj).subset_of(tb.at(bx, cand)) &&
                     tp.at(pj, px).subset_of(tb.at(cand, bx));
            }
            if (!ok) continue;
            img[static_cast<size_t>(j)] = cand;
            used[static_cast<size_t>(cand)] = 1;
            if (self(self, j + 1)) return true;
            img[static_cast<size_t>(j)] = -1;
            used[static_cast<size_t>(cand)] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

struct ColorGraphA {
    Graph graph;
    std::vector<int> to_graph; // B position -> graph index, -1 for b1
};

ColorGraphA build_color_graph_A(const Structure& b, const PairTypeTable& tb, AtomicType e1,
                                AtomicType e2_even, AtomicType e2_odd, const std::vector<int>& f,
                                int b1) {
    int n = b.size();
    ColorGraphA out;
    out.to_graph.assign(static_cast<size_t>(n), -1);
    std::vector<std::string> vertices;
    vertices.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (i == b1) continue;
        out.to_graph[static_cast<size_t>(i)] = static_cast<int>(vertices.size());
        vertices.push_back(b.universe()[static_cast<size_t>(i)]);
    }
    out.graph = Graph(std::move(vertices));
    for (int i = 0; i < n; ++i) {
        if (i == b1) continue;
        if (f[static_cast<size_t>(i)] == 2 && !e1.subset_of(tb.at(b1, i))) continue;
        AtomicType need = (f[static_cast<size_t>(i)] % 2 == 0) ? e2_even : e2_odd;
        for (int j = 0; j < n; ++j) {
            if (j == b1 || j == i) continue;
            if (f[static_cast<size_t>(i)] + 1 != f[static_cast<size_t>(j)]) continue;
            if (!need.subset_of(tb.at(i, j))) continue;
            out.graph.insert_edge(out.to_graph[static_cast<size_t>(i)],
                                  out.to_graph[static_cast<size_t>(j)]);
        }
    }
    return out;
}

// Precomputed inclusion tables for the A-loop edge conditions; the inner
// loops run per coloring and must not recompute type inclusions.
struct AcTables {
    int n = 0;
    std::vector<char> even_ok; // e_2       included in atyp((i,j),B)
    std::vector<char> odd_ok;  // e_2^{-1}  included in atyp((i,j),B)
    std::vector<char> e1_ok;   // e_1       included in atyp((i,j),B)
    bool at(const std::vector<char>& v, int i, int j) const {
        return v[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] != 0;
    }
};

AcTables make_ac_tables(const PairTypeTable& tb, AtomicType e1, AtomicType e2_even,
                        AtomicType e2_odd) {
    AcTables t;
    t.n = tb.size();
    size_t nn = static_cast<size_t>(t.n) * static_cast<size_t>(t.n);
    t.even_ok.resize(nn);
    t.odd_ok.resize(nn);
    t.e1_ok.resize(nn);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) {
            size_t idx = static_cast<size_t>(i) * static_cast<size_t>(t.n) + static_cast<size_t>(j);
            AtomicType ty = tb.at(i, j);
            t.even_ok[idx] = e2_even.subset_of(ty);
            t.odd_ok[idx] = e2_odd.subset_of(ty);
            t.e1_ok[idx] = e1.subset_of(ty);
        }
    return t;
}

// Adjacency of G(f,b1) over B positions; b1 simply has no edges.
void fill_adjacency_A(const AcTables& t, const std::vector<int>& f, int b1, int k,
                      std::vector<std::vector<int>>& adj) {
    int n = t.n;
    for (auto& row : adj) row.clear();
    for (int i = 0; i < n; ++i) {
        if (i == b1) continue;
        int fi = f[static_cast<size_t>(i)];
        if (fi >= k) continue; // no successor color
        if (fi == 2 && !t.at(t.e1_ok, b1, i)) continue;
        const auto& ok = (fi % 2 == 0) ? t.even_ok : t.odd_ok;
        for (int j = 0; j < n; ++j) {
            if (j == b1 || j == i) continue;
            if (f[static_cast<size_t>(j)] != fi + 1) continue;
            if (!t.at(ok, i, j)) continue;
            adj[static_cast<size_t>(i)].push_back(j);
            adj[static_cast<size_t>(j)].push_back(i);
        }
    }
}

// BFS over a position adjacency; returns parents (-2 unreached, -1 start).
void bfs_parents(const std::vector<std::vector<int>>& adj, int start, std::vector<int>& parent) {
    parent.assign(adj.size(), -2);
    parent[static_cast<size_t>(start)] = -1;
    std::vector<int> queue{start};
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : adj[static_cast<size_t>(u)]) {
            if (parent[static_cast<size_t>(w)] != -2) continue;
            parent[static_cast<size_t>(w)] = u;
            queue.push_back(w);
        }
    }
}

std::vector<int> path_from_parents(const std::vector<int>& parent, int t) {
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

struct ColorGraphTail {
    Graph graph;
    std::vector<int> to_graph;
};

ColorGraphTail build_color_graph_tail(const RootedPathStructure& p, const Structure& b,
                                      const std::vector<int>& f, const std::vector<int>& prefix) {
    int n = b.size();
    int c = static_cast<int>(prefix.size());
    int hc = prefix[static_cast<size_t>(c - 1)];

    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int j = 0; j + 1 < c; ++j) removed[static_cast<size_t>(prefix[static_cast<size_t>(j)])] = 1;

    ColorGraphTail out;
    out.to_graph.assign(static_cast<size_t>(n), -1);
    std::vector<std::string> vertices;
    for (int i = 0; i < n; ++i) {
        if (removed[static_cast<size_t>(i)]) continue;
        out.to_graph[static_cast<size_t>(i)] = static_cast<int>(vertices.size());
        vertices.push_back(b.universe()[static_cast<size_t>(i)]);
    }
    out.graph = Graph(std::move(vertices));

    const auto& ep = p.base().relation("E");
    const auto& eb = b.relation("E");
    for (const Tuple& t : eb) {
        int i = b.index_of(t[0]), j = b.index_of(t[1]);
        if (i == j || removed[static_cast<size_t>(i)] || removed[static_cast<size_t>(j)]) continue;
        int fi = f[static_cast<size_t>(i)], fj = f[static_cast<size_t>(j)];
        if (fi - fj != 1 && fj - fi != 1) continue;
        if (!ep.count({p.point(fi), p.point(fj)})) continue;
        if (fi == c && i != hc) continue;
        if (fj == c && j != hc) continue;
        out.graph.insert_edge(out.to_graph[static_cast<size_t>(i)],
                              out.to_graph[static_cast<size_t>(j)]);
    }
    return out;
}

} // namespace

Graph color_graph_A(const RootedPathStructure& p, const Structure& b,
                    const std::vector<int>& coloring, const std::string& b1) {
    if (!(p.base().vocabulary() == b.vocabulary()))
        throw PreconditionError("color_graph_A: vocabulary mismatch");
    int b1_idx = b.index_of(b1);
    if (b1_idx < 0) throw ValidationError("color_graph_A: unknown element '" + b1 + "'");
    if (static_cast<int>(coloring.size()) != b.size())
        throw PreconditionError("color_graph_A: coloring must be total on B");
    int k = p.size();
    for (int v : coloring)
        if (v < 2 || v > k) throw PreconditionError("color_graph_A: colors must lie in {2..k}");
    PairTypeTable tb(b);
    AtomicType e2 = p.edge_type(2);
    return build_color_graph_A(b, tb, p.edge_type(1), e2, swap_type(b.atom_space(), e2), coloring,
                               b1_idx)
        .graph;
}

Graph color_graph_tail(const RootedPathStructure& p, const Structure& b,
                       const std::vector<int>& coloring,
                       const std::vector<std::string>& prefix_images) {
    if (!is_rooted_oriented_path(p))
        throw PreconditionError("color_graph_tail: not a rooted oriented path");
    if (!(p.base().vocabulary() == b.vocabulary()))
        throw PreconditionError("color_graph_tail: vocabulary mismatch");
    if (static_cast<int>(coloring.size()) != b.size())
        throw PreconditionError("color_graph_tail: coloring must be total on B");
    int c = static_cast<int>(prefix_images.size());
    if (c < 1 || c > p.size()) throw PreconditionError("color_graph_tail: bad prefix length");
    for (int v : coloring)
        if (v < c || v > p.size())
            throw PreconditionError("color_graph_tail: colors must lie in {C..k}");
    std::vector<int> prefix;
    for (const std::string& e : prefix_images) {
        int idx = b.index_of(e);
        if (idx < 0) throw ValidationError("color_graph_tail: unknown element '" + e + "'");
        prefix.push_back(idx);
    }
    return build_color_graph_tail(p, b, coloring, prefix).graph;
}

// ---------------------------------------------------------------------------
// algorithm A(C)
// ---------------------------------------------------------------------------

namespace {

struct AcContext {
    const LongShortOracle* oracle;
    SolverConfig cfg;
    SolverStats* stats;
};

bool ac_recurse(const RootedPathStructure& p, const Structure& b, AcContext& ctx, int depth);

// Complete split of the embedding question at point a: P embeds into B iff
// some embedding of P|a extends, i.e. (P^|a, B_h) is a yes instance for
// some prefix embedding h. Used for case a > 2 and as the recursion step
// when the color-coded loops do not apply.
bool split_at(const RootedPathStructure& p, const Structure& b, int a, AcContext& ctx, int depth) {
    PairTypeTable tp(p.base());
    PairTypeTable tb(b);
    RootedPathStructure suffix = cut_up(p, a);
    bool accepted = false;
    for_each_prefix_embedding(p, tp, b, tb, a, [&](const std::vector<int>& img) {
        std::set<std::string> keep(b.universe().begin(), b.universe().end());
        for (int j = 0; j + 1 < a; ++j)
            keep.erase(b.universe()[static_cast<size_t>(img[static_cast<size_t>(j)])]);
        const std::string& new_root = b.universe()[static_cast<size_t>(img[static_cast<size_t>(a - 1)])];
        Structure bh = with_root(induced_substructure(b, keep), new_root);
        if (ac_recurse(suffix, bh, ctx, depth + 1)) {
            accepted = true;
            return true;
        }
        return false;
    });
    return accepted;
}

bool check_witness(const RootedPathStructure& p, const Structure& b, const Assignment& h,
                   SolverStats* stats) {
    bool ok = is_embedding(p.base(), b, h);
    if (stats) {
        ++stats->witnesses_checked;
        if (ok) ++stats->witnesses_valid;
    }
    assert(ok && "color-coded accept must carry an embedding witness");
    return ok;
}

bool ac_recurse(const RootedPathStructure& p, const Structure& b, AcContext& ctx, int depth) {
    if (ctx.stats) ctx.stats->max_depth = std::max(ctx.stats->max_depth, depth + 1);

    int k = p.size();
    int n = b.size();

    auto unf = unfoldable_edges(p);
    long c = static_cast<long>(unf.size());
    long d = 0;
    for (int i : unf) d = std::max(d, static_cast<long>(max_degree(p, i)));

    bool small_p = k <= 2 + c * d + d;
    bool small_b = n <= k;
    bool capped = k > ctx.cfg.k_max || n > 64;
    bool ample = true;
    if (!small_p && !small_b && !capped) {
        long range = static_cast<long>(k - 1) * (k - 1);
        ample = hash_family_complete(n, k - 1, range, ctx.cfg.log_multiplier);
        if (!ample && ctx.stats) ++ctx.stats->hash_fallbacks;
    }
    if (small_p || small_b || capped || !ample) {
        if (ctx.stats) ++ctx.stats->brute_force_calls;
        return brute_force_embedding(p.base(), b).has_value();
    }

    // minimal a with 1 < a < k-d and none of e_{a+1}..e_{a+d} unfoldable
    int a = -1;
    for (int cand = 2; cand < k - d; ++cand) {
        bool clear = true;
        for (int j = cand + 1; j <= cand + static_cast<int>(d) && clear; ++j)
            clear = !is_unfoldable(p, j, 1);
        if (clear) {
            a = cand;
            break;
        }
    }
    assert(a != -1 && a <= 2 + c * d);
    if (a == -1) { // unreachable when k > 2+cd+d; stay exact regardless
        if (ctx.stats) ++ctx.stats->brute_force_calls;
        return brute_force_embedding(p.base(), b).has_value();
    }

#ifndef NDEBUG
    for (int i = 1; a + i <= k - 1; ++i)
        assert(p.edge_type(a + i).subset_of(p.edge_power_type(a, i)));
#endif

    if (a > 2) return split_at(p, b, a, ctx, depth);

    // case a = 2: the index the second loop recurses at. e_{i+1} is the
    // first critical edge after e_2, so types satisfy
    // atyp(e_j) = atyp(e_2^{-j}) for 2 <= j <= i.
    int i = k - 1;
    for (int idx : critical_edges(p)) {
        if (idx >= 3) {
            i = idx - 1;
            break;
        }
    }

    PairTypeTable tb(b);
    AtomicType e1 = p.edge_type(1);
    AtomicType e2_even = p.edge_type(2);
    AtomicType e2_odd = swap_type(p.base().atom_space(), e2_even);
    AcTables tables = make_ac_tables(tb, e1, e2_even, e2_odd);
    auto colorings = realizable_colorings(n, 2, k, ctx.cfg.log_multiplier);

    // first loop: connectivity from a color-2 vertex to a color-k vertex
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    std::vector<int> parent;
    for (const auto& f : colorings) {
        bool has_lo = false, has_hi = false;
        for (int v = 0; v < n; ++v) {
            has_lo = has_lo || f[static_cast<size_t>(v)] == 2;
            has_hi = has_hi || f[static_cast<size_t>(v)] == k;
        }
        if (!has_lo || !has_hi) continue;
        for (int b1 = 0; b1 < n; ++b1) {
            fill_adjacency_A(tables, f, b1, k, adj);
            for (int s = 0; s < n; ++s) {
                if (s == b1 || f[static_cast<size_t>(s)] != 2) continue;
                bfs_parents(adj, s, parent);
                for (int t = 0; t < n; ++t) {
                    if (t == b1 || f[static_cast<size_t>(t)] != k) continue;
                    if (parent[static_cast<size_t>(t)] == -2) continue;
                    // the path itself is an embedding witness; record it
                    std::vector<int> path = path_from_parents(parent, t);
                    Assignment witness;
                    witness[p.point(1)] = b.universe()[static_cast<size_t>(b1)];
                    for (int j = 2; j <= k; ++j)
                        witness[p.point(j)] =
                            b.universe()[static_cast<size_t>(path[static_cast<size_t>(j - 2)])];
                    check_witness(p, b, witness, ctx.stats);
                    if (ctx.stats) ++ctx.stats->first_loop_accepts;
                    return true;
                }
            }
        }
    }

    if (i == 2) {
        // e_3 itself is critical, which on general vocabularies can happen
        // through a strict type inclusion (then atyp(e_3) != atyp(e_2^{-1})
        // even though e_3 is foldable). The second loop's prefix would
        // cover only e_1, e_2 and cannot be run soundly, so fall back to
        // the complete split at p_2.
        return split_at(p, b, 2, ctx, depth);
    }

    // second loop: consult the oracle for an exact-length prefix path and
    // recurse on the remainder of P beyond the first critical edge.
    // Distinct colorings often induce the same residual instance, so the
    // recursion is memoized on (universe subset, new root).
    RootedPathStructure suffix = cut_up(p, i);
    std::map<std::pair<std::vector<char>, int>, bool> residual_cache;
    for (const auto& f : colorings) {
        bool has_lo = false, has_mid = false;
        for (int v = 0; v < n; ++v) {
            has_lo = has_lo || f[static_cast<size_t>(v)] == 2;
            has_mid = has_mid || f[static_cast<size_t>(v)] == i;
        }
        if (!has_lo || !has_mid) continue;
        for (int b1 = 0; b1 < n; ++b1) {
            ColorGraphA cg = build_color_graph_A(b, tb, e1, e2_even, e2_odd, f, b1);
            for (int s = 0; s < n; ++s) {
                if (s == b1 || f[static_cast<size_t>(s)] != 2) continue;
                for (int t = 0; t < n; ++t) {
                    if (t == b1 || f[static_cast<size_t>(t)] != i) continue;
                    if (ctx.stats) ++ctx.stats->oracle_queries;
                    if (!(*ctx.oracle)(cg.graph, b.universe()[static_cast<size_t>(s)],
                                       b.universe()[static_cast<size_t>(t)], i - 2, k - 2))
                        continue;
                    std::vector<char> keep_mask(static_cast<size_t>(n), 0);
                    for (int v = 0; v < n; ++v)
                        if (v != b1 && (f[static_cast<size_t>(v)] > i || v == t))
                            keep_mask[static_cast<size_t>(v)] = 1;
                    auto key = std::make_pair(keep_mask, t);
                    auto cached = residual_cache.find(key);
                    bool sub;
                    if (cached != residual_cache.end()) {
                        sub = cached->second;
                    } else {
                        std::set<std::string> keep;
                        for (int v = 0; v < n; ++v)
                            if (keep_mask[static_cast<size_t>(v)])
                                keep.insert(b.universe()[static_cast<size_t>(v)]);
                        Structure bprime = with_root(induced_substructure(b, keep),
                                                     b.universe()[static_cast<size_t>(t)]);
                        sub = ac_recurse(suffix, bprime, ctx, depth + 1);
                        residual_cache.emplace(std::move(key), sub);
                    }
                    if (sub) {
                        if (ctx.stats) ++ctx.stats->second_loop_accepts;
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

} // namespace

bool algorithm_AC(const RootedPathStructure& p, const Structure& b, const LongShortOracle& oracle,
                  const SolverConfig& cfg, SolverStats* stats) {
    if (!(p.base().vocabulary() == b.vocabulary()))
        throw PreconditionError("algorithm_AC: vocabulary mismatch");
    AcContext ctx{&oracle, cfg, stats};
    return ac_recurse(p, b, ctx, 0);
}

// ---------------------------------------------------------------------------
// algorithm B
// ---------------------------------------------------------------------------

bool algorithm_B(const RootedPathStructure& p, const Structure& b, int c, const SolverConfig& cfg,
                 SolverStats* stats) {
    if (!is_rooted_oriented_path(p))
        throw PreconditionError("algorithm_B: P is not a rooted oriented path");
    if (c < 1 || alternating_tail_constant(p) > c)
        throw PreconditionError("algorithm_B: tail is not C-alternating");
    if (!(p.base().vocabulary() == b.vocabulary()))
        throw PreconditionError("algorithm_B: vocabulary mismatch");

    int k = p.size();
    int n = b.size();
    int colors = k - c + 1;

    bool small = k <= c || n <= k;
    bool capped = colors > cfg.k_max - 1 || n > 64;
    bool ample = true;
    if (!small && !capped) {
        long range = static_cast<long>(colors) * colors;
        ample = hash_family_complete(n, colors, range, cfg.log_multiplier);
        if (!ample && stats) ++stats->hash_fallbacks;
    }
    if (small || capped || !ample) {
        if (stats) ++stats->brute_force_calls;
        return brute_force_embedding(p.base(), b).has_value();
    }

    PairTypeTable tp(p.base());
    PairTypeTable tb(b);
    auto colorings = realizable_colorings(n, c, k, cfg.log_multiplier);

    // prefix embeddings of P|C collected once
    std::vector<std::vector<int>> prefixes;
    for_each_prefix_embedding(p, tp, b, tb, c, [&](const std::vector<int>& img) {
        prefixes.push_back(img);
        return false;
    });
    if (prefixes.empty()) return false;

    // E^B as position pairs, and which ordered color pairs are E^P edges
    std::vector<std::pair<int, int>> eb_pairs;
    for (const Tuple& t : b.relation("E")) {
        int x = b.index_of(t[0]), y = b.index_of(t[1]);
        if (x != y) eb_pairs.emplace_back(x, y);
    }
    std::vector<char> ep_ok(static_cast<size_t>(k + 1) * static_cast<size_t>(k + 1), 0);
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
            if (std::abs(x - y) == 1 && p.base().has_tuple("E", {p.point(x), p.point(y)}))
                ep_ok[static_cast<size_t>(x) * static_cast<size_t>(k + 1) + static_cast<size_t>(y)] = 1;

    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    std::vector<int> parent;
    std::vector<char> removed(static_cast<size_t>(n));
    for (const auto& f : colorings) {
        bool has_top = false;
        for (int v = 0; v < n && !has_top; ++v) has_top = f[static_cast<size_t>(v)] == k;
        if (!has_top) continue;
        for (const auto& img : prefixes) {
            int hc = img[static_cast<size_t>(c - 1)];
            if (f[static_cast<size_t>(hc)] != c) continue;

            std::fill(removed.begin(), removed.end(), 0);
            for (int j = 0; j + 1 < c; ++j) removed[static_cast<size_t>(img[static_cast<size_t>(j)])] = 1;
            for (auto& row : adj) row.clear();
            for (const auto& [x, y] : eb_pairs) {
                if (removed[static_cast<size_t>(x)] || removed[static_cast<size_t>(y)]) continue;
                int fx = f[static_cast<size_t>(x)], fy = f[static_cast<size_t>(y)];
                if (!ep_ok[static_cast<size_t>(fx) * static_cast<size_t>(k + 1) +
                           static_cast<size_t>(fy)])
                    continue;
                if (fx == c && x != hc) continue;
                if (fy == c && y != hc) continue;
                adj[static_cast<size_t>(x)].push_back(y);
                adj[static_cast<size_t>(y)].push_back(x);
            }

            bfs_parents(adj, hc, parent);
            for (int t = 0; t < n; ++t) {
                if (f[static_cast<size_t>(t)] != k) continue;
                if (removed[static_cast<size_t>(t)] || parent[static_cast<size_t>(t)] == -2)
                    continue;
                std::vector<int> path = path_from_parents(parent, t);
                Assignment witness;
                for (int j = 1; j <= c; ++j)
                    witness[p.point(j)] =
                        b.universe()[static_cast<size_t>(img[static_cast<size_t>(j - 1)])];
                for (int m = 1; m <= k - c; ++m)
                    witness[p.point(c + m)] =
                        b.universe()[static_cast<size_t>(path[static_cast<size_t>(m)])];
                check_witness(p, b, witness, stats);
                return true;
            }
        }
    }
    return false;
}

} // namespace pse
