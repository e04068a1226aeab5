#include "pse/verify.hpp"

#include <algorithm>
#include <chrono>

#include "pse/analysis.hpp"
#include "pse/errors.hpp"

namespace pse {

RootedPathStructure random_oriented_tail_path(Rng& rng, int k, int c_max) {
    // choose the directions freely up to some cutoff, alternate afterwards
    int cutoff = static_cast<int>(rng.range(1, c_max));
    std::vector<int> dirs(static_cast<size_t>(k - 1));
    for (int i = 1; i <= k - 1; ++i) {
        if (i < cutoff || i == 1)
            dirs[static_cast<size_t>(i - 1)] = rng.coin() ? 1 : 0;
        else
            dirs[static_cast<size_t>(i - 1)] = 1 - dirs[static_cast<size_t>(i - 2)];
    }
    std::vector<std::string> universe;
    for (int i = 1; i <= k; ++i) universe.push_back("p" + std::to_string(i));
    RelationMap relations;
    relations[kRootSymbol] = {{universe[0]}};
    auto& e = relations["E"];
    for (int i = 1; i <= k - 1; ++i) {
        const std::string& a = universe[static_cast<size_t>(i - 1)];
        const std::string& b = universe[static_cast<size_t>(i)];
        if (dirs[static_cast<size_t>(i - 1)] == 0)
            e.insert({a, b});
        else
            e.insert({b, a});
    }
    Vocabulary vocab = Vocabulary::make({{kRootSymbol, 1}, {"E", 2}});
    return as_rooted_path(Structure::validate(vocab, std::move(universe), std::move(relations)));
}

Structure random_target(Rng& rng, const RootedPathStructure& p, int max_n) {
    int k = p.size();
    int lo = std::max(2, k - 1); // include some too-small targets
    int n = static_cast<int>(rng.range(lo, std::max(lo, max_n)));

    std::vector<std::string> universe;
    for (int i = 1; i <= n; ++i) universe.push_back("b" + std::to_string(i));

    RelationMap relations;
    for (const auto& [symbol, arity] : p.base().vocabulary().symbols()) relations[symbol];

    if (n >= k && rng.coin()) {
        // plant a copy of P on random distinct positions
        auto slots = rng.sample(n, k);
        // random order: shuffle the slot assignment
        for (size_t i = slots.size(); i > 1; --i)
            std::swap(slots[i - 1], slots[rng.below(i)]);
        Assignment h;
        for (int i = 1; i <= k; ++i)
            h[p.point(i)] = universe[static_cast<size_t>(slots[static_cast<size_t>(i - 1)])];
        for (const auto& [symbol, tuples] : p.base().relations()) {
            for (const Tuple& t : tuples) {
                Tuple image;
                for (const std::string& e : t) image.push_back(h[e]);
                relations[symbol].insert(std::move(image));
            }
        }
    }

    // uniform noise tuples
    for (const auto& [symbol, arity] : p.base().vocabulary().symbols()) {
        long count = rng.range(0, n);
        for (long i = 0; i < count; ++i) {
            Tuple t;
            for (int j = 0; j < arity; ++j)
                t.push_back(universe[static_cast<size_t>(rng.below(static_cast<size_t>(n)))]);
            relations[symbol].insert(std::move(t));
        }
    }

    return Structure::validate(p.base().vocabulary(), std::move(universe), std::move(relations));
}

Graph random_graph(Rng& rng, int n) {
    Graph g = Graph::with_n(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(static_cast<std::uint64_t>(n)) < 2) g.insert_edge(u, v);
    return g;
}

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

struct FamilyPool {
    std::vector<int> families; // 1..4
    bool pkl = false;
};

FamilyPool pool_from(const VerificationConfig& cfg) {
    for (const auto& f : cfg.families)
        if (f != "1" && f != "2" && f != "3" && f != "4" && f != "pkl")
            throw ValidationError("verify: unknown family '" + f + "'");
    for (const auto& m : cfg.methods)
        if (m != "ac" && m != "tail")
            throw ValidationError("verify: unknown method '" + m + "'");
    FamilyPool pool;
    for (int f = 1; f <= 4; ++f)
        if (has(cfg.families, std::to_string(f))) pool.families.push_back(f);
    pool.pkl = has(cfg.families, "pkl");
    if (pool.families.empty() && !pool.pkl)
        throw ValidationError("verify: no families enabled");
    return pool;
}

RootedPathStructure random_P(Rng& rng, const FamilyPool& pool, int max_k) {
    long options = static_cast<long>(pool.families.size()) + (pool.pkl ? 1 : 0);
    long pick = rng.range(0, options - 1);
    if (pick < static_cast<long>(pool.families.size())) {
        int fam = pool.families[static_cast<size_t>(pick)];
        int size = static_cast<int>(rng.range(3, max_k));
        return gen_family(fam, size);
    }
    long l = rng.range(2, std::max<long>(2, max_k - 1));
    long k = rng.range(0, l - 1);
    return make_P_kl(k, l);
}

Json graph_instance_json(const Graph& g, const std::string& s, const std::string& t, long k,
                         long l, bool with_k) {
    Json j;
    j["graph_edge_list"] = serialize_graph(g);
    j["s"] = s;
    j["t"] = t;
    if (with_k) j["k"] = k;
    j["l"] = l;
    return j;
}

} // namespace


namespace {

struct CheckTimer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

} // namespace

VerificationReport run_verification(const VerificationConfig& cfg) {
    if (cfg.max_k < 3) throw ValidationError("verify: max_k must be >= 3");
    if (cfg.max_n < cfg.max_k) throw ValidationError("verify: max_n must be >= max_k");
    if (cfg.instance_count < 1) throw ValidationError("verify: instance_count must be >= 1");

    FamilyPool pool = pool_from(cfg);
    VerificationReport report;
    report.config = cfg;

    auto oracle = default_longshort_oracle();

    // (a) algorithm A(C) against the exhaustive oracle
    if (has(cfg.methods, "ac")) {
        CheckTimer timer;
        CheckResult check{"ac_vs_brute", 0, 0, std::nullopt};
        Rng rng(cfg.seed * 6364136223846793005ULL + 1);
        for (int it = 0; it < cfg.instance_count; ++it) {
            RootedPathStructure p = random_P(rng, pool, cfg.max_k);
            Structure b = random_target(rng, p, cfg.max_n);
            bool expected = brute_force_embedding(p.base(), b).has_value();
            bool got = algorithm_AC(p, b, oracle, cfg.solver);
            if (expected == got) {
                ++check.pass;
            } else if (++check.fail == 1) {
                Json ce;
                ce["P"] = structure_to_json(p.base());
                ce["B"] = structure_to_json(b);
                ce["expected"] = expected;
                ce["got"] = got;
                check.counterexample = std::move(ce);
            }
        }
        report.checks.push_back(std::move(check));
        report.timings_ms.push_back(timer.elapsed_ms());
    }

    // (b) algorithm B against the exhaustive oracle on oriented tails
    if (has(cfg.methods, "tail")) {
        CheckTimer timer;
        CheckResult check{"tail_vs_brute", 0, 0, std::nullopt};
        Rng rng(cfg.seed * 6364136223846793005ULL + 2);
        for (int it = 0; it < cfg.instance_count; ++it) {
            int k = static_cast<int>(rng.range(3, cfg.max_k));
            RootedPathStructure p = random_oriented_tail_path(rng, k, 3);
            Structure b = random_target(rng, p, cfg.max_n);
            int c = alternating_tail_constant(p);
            bool expected = brute_force_embedding(p.base(), b).has_value();
            bool got = algorithm_B(p, b, c, cfg.solver);
            if (expected == got) {
                ++check.pass;
            } else if (++check.fail == 1) {
                Json ce;
                ce["P"] = structure_to_json(p.base());
                ce["B"] = structure_to_json(b);
                ce["C"] = c;
                ce["expected"] = expected;
                ce["got"] = got;
                check.counterexample = std::move(ce);
            }
        }
        report.checks.push_back(std::move(check));
        report.timings_ms.push_back(timer.elapsed_ms());
    }

    // (c) ustcon <-> embedding round trips, alternating case 1 and case 2
    {
        CheckTimer timer;
        CheckResult check{"ustcon_roundtrip", 0, 0, std::nullopt};
        Rng rng(cfg.seed * 6364136223846793005ULL + 3);
        for (int it = 0; it < cfg.instance_count; ++it) {
            int n = static_cast<int>(rng.range(2, cfg.max_n));
            Graph g = random_graph(rng, n);
            std::string s = std::to_string(rng.range(0, n - 1));
            std::string t = std::to_string(rng.range(0, n - 1));
            long l = rng.range(0, 3);
            int case_no = (it % 2) + 1;
            auto supply = family_supply(case_no == 1 ? 2 : 3, 3);
            auto [p, b] = reduce_ustcon(g, s, t, l, supply, case_no);
            bool expected = solve_ustcon(g, s, t, l);
            bool got = brute_force_embedding(p.base(), b).has_value();
            if (expected == got) {
                ++check.pass;
            } else if (++check.fail == 1) {
                Json ce = graph_instance_json(g, s, t, 0, l, false);
                ce["case"] = case_no;
                ce["expected_ustcon"] = expected;
                ce["embedding"] = got;
                check.counterexample = std::move(ce);
            }
        }
        report.checks.push_back(std::move(check));
        report.timings_ms.push_back(timer.elapsed_ms());
    }

    // (d) longshort <-> embedding round trip via (P_{k,l}, G')
    {
        CheckTimer timer;
        CheckResult check{"longshort_roundtrip", 0, 0, std::nullopt};
        Rng rng(cfg.seed * 6364136223846793005ULL + 4);
        for (int it = 0; it < cfg.instance_count; ++it) {
            int n = static_cast<int>(rng.range(2, cfg.max_n));
            Graph g = random_graph(rng, n);
            std::string s = std::to_string(rng.range(0, n - 1));
            std::string t = std::to_string(rng.range(0, n - 1));
            long l = rng.range(1, 4);
            long k = rng.range(0, l - 1);
            auto [p, gprime] = reduce_longshort(g, s, t, k, l);
            bool expected = solve_longshort(make_longshort_instance(g, s, t, k, l));
            bool got = brute_force_embedding(p.base(), gprime).has_value();
            if (expected == got) {
                ++check.pass;
            } else if (++check.fail == 1) {
                Json ce = graph_instance_json(g, s, t, k, l, true);
                ce["expected_longshort"] = expected;
                ce["embedding"] = got;
                check.counterexample = std::move(ce);
            }
        }
        report.checks.push_back(std::move(check));
        report.timings_ms.push_back(timer.elapsed_ms());
    }

    // (e) analysis facts on the example families
    {
        CheckTimer timer;
        CheckResult check{"analysis_facts", 0, 0, std::nullopt};
        Rng rng(cfg.seed * 6364136223846793005ULL + 5);
        for (int it = 0; it < cfg.instance_count; ++it) {
            std::string failure;
            Json instance;
            long options = static_cast<long>(pool.families.size()) + (pool.pkl ? 1 : 0);
            long pick = rng.range(0, options - 1);
            if (pick < static_cast<long>(pool.families.size())) {
                int fam = pool.families[static_cast<size_t>(pick)];
                int size = static_cast<int>(rng.range(3, cfg.max_k));
                RootedPathStructure p = gen_family(fam, size);
                AnalysisReport r = analyze(p);
                instance["family"] = fam;
                instance["size"] = size;
                instance["report"] = analysis_report_to_json(r);

                if (fam == 1 || fam == 4) {
                    if (r.unfoldability_degree != 0)
                        failure = "family " + std::to_string(fam) + " degree not 0";
                }
                if (fam == 2 && failure.empty()) {
                    // unfoldable edges are exactly the even positions
                    std::vector<int> evens;
                    for (int i = 2; i < size; i += 2) evens.push_back(i);
                    if (r.unfoldable_edges != evens) failure = "family 2 unfoldable set mismatch";
                }
                if (fam == 3 && failure.empty()) {
                    // only the last edge unfoldable; the i > d side condition
                    // caps its degree at k-2
                    if (r.unfoldable_edges != std::vector<int>{size - 1} ||
                        r.max_edge_degree != size - 2)
                        failure = "family 3 unfoldable/degree mismatch";
                }
                if ((fam == 3 || fam == 4) && size >= 4 && failure.empty()) {
                    if (r.critical_edges.size() != 2)
                        failure = "family " + std::to_string(fam) + " critical count not 2";
                }
                if (failure.empty() && (r.critical_edges.empty() || r.critical_edges.front() != 2))
                    failure = "index 2 not critical";
                if (failure.empty()) {
                    long t = two_var_atom_count(p.base().vocabulary());
                    long c = static_cast<long>(r.unfoldable_edges.size());
                    if (static_cast<long>(r.critical_edges.size()) > critical_bound(c, t))
                        failure = "critical bound violated";
                }
            } else {
                long l = rng.range(2, std::max<long>(2, cfg.max_k - 1));
                long k = rng.range(0, l - 1);
                RootedPathStructure p = make_P_kl(k, l);
                AnalysisReport r = analyze(p);
                instance["pkl"] = Json{{"k", k}, {"l", l}};
                instance["report"] = analysis_report_to_json(r);

                std::vector<int> expected_unf;
                if (k + 2 <= l) expected_unf.push_back(static_cast<int>(k) + 2);
                if (r.unfoldable_edges != expected_unf || r.max_edge_degree != (expected_unf.empty() ? 0 : 1))
                    failure = "P_kl unfoldable set mismatch";
                if (failure.empty() && p.size() >= 3 &&
                    (r.critical_edges.empty() || r.critical_edges.front() != 2))
                    failure = "index 2 not critical";
            }

            if (failure.empty()) {
                ++check.pass;
            } else if (++check.fail == 1) {
                instance["failure"] = failure;
                check.counterexample = std::move(instance);
            }
        }
        report.checks.push_back(std::move(check));
        report.timings_ms.push_back(timer.elapsed_ms());
    }

    for (const auto& c : report.checks) report.all_pass = report.all_pass && c.fail == 0;
    return report;
}

Json verification_report_to_json(const VerificationReport& report) {
    Json j;
    Json cfg;
    cfg["seed"] = report.config.seed;
    cfg["instance_count"] = report.config.instance_count;
    cfg["max_k"] = report.config.max_k;
    cfg["max_n"] = report.config.max_n;
    cfg["families"] = report.config.families;
    cfg["methods"] = report.config.methods;
    cfg["k_max"] = report.config.solver.k_max;
    cfg["log_base_multiplier"] = report.config.solver.log_multiplier;
    j["config"] = std::move(cfg);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["fail"] = c.fail;
        jc["counterexample"] = c.counterexample ? *c.counterexample : Json(nullptr);
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = report.all_pass;
    return j;
}

} // namespace pse
