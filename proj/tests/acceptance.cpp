// Acceptance suite: runs each criterion end to end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "pse/analysis.hpp"
#include "pse/hashing.hpp"
#include "pse/io.hpp"
#include "pse/reductions.hpp"
#include "pse/rng.hpp"
#include "pse/solvers.hpp"
#include "pse/verify.hpp"

using namespace pse;

namespace {

struct Outcome {
    int id;
    bool pass;
    std::string detail;
};

std::vector<Outcome> outcomes;

void report(int id, bool pass, const std::string& detail) {
    outcomes.push_back({id, pass, detail});
    std::printf("[%2d] %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RootedPathStructure sample_pattern(Rng& rng, int max_k) {
    long pick = rng.below(5);
    if (pick == 4) {
        long l = rng.range(2, max_k - 1); // size l+1 <= max_k
        long k = rng.range(0, l - 1);
        return make_P_kl(k, l);
    }
    return gen_family(static_cast<int>(pick) + 1, static_cast<int>(rng.range(3, max_k)));
}

// criterion 1: algorithm A(C) against the exhaustive oracle,
// 500 seeded instances, 3 <= |P| <= 7, |B| <= 9, under 5 minutes.
// The stats feed criterion 9.
SolverStats criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    auto oracle = default_longshort_oracle();
    Rng rng(20240001);
    SolverStats stats;
    int agree = 0, yes = 0;
    const int total = 500;
    std::string first_mismatch;
    for (int it = 0; it < total; ++it) {
        RootedPathStructure p = sample_pattern(rng, 7);
        Structure b = random_target(rng, p, 9);
        bool expected = brute_force_embedding(p.base(), b).has_value();
        bool got = algorithm_AC(p, b, oracle, {}, &stats);
        if (expected == got)
            ++agree;
        else if (first_mismatch.empty())
            first_mismatch = "first mismatch at instance " + std::to_string(it);
        if (expected) ++yes;
    }
    double elapsed = seconds_since(t0);
    bool pass = agree == total && elapsed < 300.0;
    std::ostringstream detail;
    detail << "algorithm A(C) vs brute force: " << agree << "/" << total << " agree ("
           << yes << " yes), " << static_cast<int>(elapsed) << "s";
    if (!first_mismatch.empty()) detail << "; " << first_mismatch;
    if (elapsed >= 300.0) detail << "; exceeded the 5-minute target";
    report(1, pass, detail.str());
    return stats;
}

// criterion 2: algorithm B against the oracle on rooted oriented paths
// with C-alternating tails, C <= 3, 300 seeded instances.
void criterion_2() {
    Rng rng(20240002);
    SolverStats stats;
    int agree = 0, yes = 0;
    const int total = 300;
    for (int it = 0; it < total; ++it) {
        int k = static_cast<int>(rng.range(3, 7));
        RootedPathStructure p = random_oriented_tail_path(rng, k, 3);
        Structure b = random_target(rng, p, 9);
        int c = alternating_tail_constant(p);
        bool expected = brute_force_embedding(p.base(), b).has_value();
        bool got = algorithm_B(p, b, c, {}, &stats);
        if (expected == got) ++agree;
        if (expected) ++yes;
    }
    bool pass = agree == total && stats.witnesses_checked == stats.witnesses_valid;
    std::ostringstream detail;
    detail << "algorithm B vs brute force on oriented tails: " << agree << "/" << total
           << " agree (" << yes << " yes)";
    report(2, pass, detail.str());
}

// criteria 3 and 4: the ustcon <-> embedding equivalence through the
// gadget, case 1 on family 2 and case 2 on family 3, 200 instances each.
void criterion_3_4(int id, int case_no, int family) {
    Rng rng(20240000 + id);
    int agree = 0;
    const int total = 200;
    for (int it = 0; it < total; ++it) {
        int n = static_cast<int>(rng.range(2, 8));
        Graph g = random_graph(rng, n);
        std::string s = std::to_string(rng.range(0, n - 1));
        std::string t = std::to_string(rng.range(0, n - 1));
        long l = rng.range(0, 3);
        auto [p, b] = reduce_ustcon(g, s, t, l, family_supply(family), case_no);
        bool u = solve_ustcon(g, s, t, l);
        bool e = brute_force_embedding(p.base(), b).has_value();
        if (u == e) ++agree;
    }
    std::ostringstream detail;
    detail << "ustcon reduction case " << case_no << " (family " << family << "): " << agree
           << "/" << total << " exact agreements";
    report(id, agree == total, detail.str());
}

// criterion 5: the long-short <-> embedding round trip via (P_{k,l}, G').
void criterion_5() {
    Rng rng(20240005);
    int agree = 0;
    const int total = 200;
    for (int it = 0; it < total; ++it) {
        int n = static_cast<int>(rng.range(2, 8));
        Graph g = random_graph(rng, n);
        std::string s = std::to_string(rng.range(0, n - 1));
        std::string t = std::to_string(rng.range(0, n - 1));
        long l = rng.range(1, 4);
        long k = rng.range(0, l - 1);
        auto [p, gp] = reduce_longshort(g, s, t, k, l);
        bool ls = solve_longshort(make_longshort_instance(g, s, t, k, l));
        bool e = brute_force_embedding(p.base(), gp).has_value();
        if (ls == e) ++agree;
    }
    std::ostringstream detail;
    detail << "long-short round trip via (P_kl, G'): " << agree << "/" << total
           << " exact agreements";
    report(5, agree == total, detail.str());
}

// criterion 6: the analysis facts, exact integer equality.
void criterion_6() {
    std::vector<std::string> failures;

    // family 1 and family 4, sizes 3..12: unfoldability degree 0
    for (int size = 3; size <= 12; ++size) {
        if (unfoldability_degree(gen_family(1, size)) != 0)
            failures.push_back("family 1 size " + std::to_string(size) + " degree != 0");
        if (unfoldability_degree(gen_family(4, size)) != 0)
            failures.push_back("family 4 size " + std::to_string(size) + " degree != 0");
    }

    // family 2: every even-position edge has max degree exactly 1.
    // Kept as stated although it cannot hold: under the unfoldability
    // definition the even edges beyond e_2 have degree exactly 2 (their
    // depth-1 and depth-2 folds land on same-direction edges and only the
    // depth-3 fold matches), so this clause reports the discrepancy
    // instead of being weakened.
    for (int size = 3; size <= 12; ++size) {
        RootedPathStructure p = gen_family(2, size);
        for (int i = 2; i < size; i += 2) {
            int d = max_degree(p, i);
            if (d != 1)
                failures.push_back("family 2 size " + std::to_string(size) + " edge " +
                                   std::to_string(i) + " has degree " + std::to_string(d));
        }
    }

    // family 3 and family 4: exactly 2 critical edges (sizes >= 4; at
    // size 3 the two critical positions coincide)
    for (int size = 4; size <= 12; ++size) {
        if (critical_edges(gen_family(3, size)).size() != 2)
            failures.push_back("family 3 size " + std::to_string(size) + " critical count != 2");
        if (critical_edges(gen_family(4, size)).size() != 2)
            failures.push_back("family 4 size " + std::to_string(size) + " critical count != 2");
    }

    // index 2 is critical in every generated structure with k >= 3
    auto check_index2 = [&](const RootedPathStructure& p, const std::string& name) {
        auto crit = critical_edges(p);
        if (p.size() >= 3 && (crit.empty() || crit.front() != 2))
            failures.push_back(name + ": index 2 not critical");
    };
    for (int fam = 1; fam <= 4; ++fam)
        for (int size = 3; size <= 12; ++size)
            check_index2(gen_family(fam, size),
                         "family " + std::to_string(fam) + " size " + std::to_string(size));
    for (long l = 2; l <= 6; ++l)
        for (long k = 0; k < l; ++k)
            check_index2(make_P_kl(k, l),
                         "P_" + std::to_string(k) + "," + std::to_string(l));

    std::ostringstream detail;
    if (failures.empty()) {
        detail << "analysis facts: all clauses hold exactly";
    } else {
        detail << "analysis facts: " << failures.size() << " clause violations; first: \""
               << failures.front()
               << "\" (family-2 even edges beyond e2 have degree 2 under the unfoldability "
                  "definition; the degree-exactly-1 clause is kept as stated, see README)";
    }
    report(6, failures.empty(), detail.str());
}

// criterion 7: the critical-edge bound c + t(c+1), zero violations.
void criterion_7() {
    int checked = 0, violations = 0;
    auto check = [&](const RootedPathStructure& p) {
        ++checked;
        long t = two_var_atom_count(p.base().vocabulary());
        long c = static_cast<long>(unfoldable_edges(p).size());
        if (static_cast<long>(critical_edges(p).size()) > critical_bound(c, t)) ++violations;
    };
    for (int fam = 1; fam <= 4; ++fam)
        for (int size = 3; size <= 12; ++size) check(gen_family(fam, size));
    for (long l = 2; l <= 6; ++l)
        for (long k = 0; k < l; ++k) check(make_P_kl(k, l));

    std::ostringstream detail;
    detail << "critical bound c + t(c+1): " << violations << " violations over " << checked
           << " structures";
    report(7, violations == 0, detail.str());
}

// criterion 8: the hash family covers random k-subsets within the prime
// bound k^2 ceil(log2 n); any miss must be absorbed by the brute-force
// fallback.
void criterion_8() {
    Rng rng(20240008);
    int covered = 0, total = 0;
    bool fallback_ok = true;
    std::ostringstream misses;
    for (long n : {50L, 100L, 200L}) {
        for (int k : {2, 3, 4}) {
            long range = static_cast<long>(k) * k;
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<long> subset;
                for (long v : rng.sample(n, k)) subset.push_back(v + 1);
                ++total;
                if (find_injective_hash(subset, n, range).has_value()) {
                    ++covered;
                } else {
                    misses << " n=" << n << ",k=" << k;
                    // exercise the documented fallback: an incomplete family
                    // must route the solver to brute force, keeping answers
                    // exact; verified here on a fresh planted instance
                    Rng inner(rng.next());
                    RootedPathStructure p = gen_family(1, k + 1);
                    Structure b = random_target(inner, p, 9);
                    SolverStats stats;
                    bool got = algorithm_AC(p, b, default_longshort_oracle(), {}, &stats);
                    bool expected = brute_force_embedding(p.base(), b).has_value();
                    fallback_ok = fallback_ok && got == expected;
                }
            }
        }
    }
    double rate = 100.0 * covered / total;
    bool pass = (covered == total || fallback_ok);
    std::ostringstream detail;
    detail << "hash family coverage: " << covered << "/" << total << " subsets ("
           << rate << "%)";
    if (covered != total) detail << "; misses:" << misses.str() << "; fallback exact";
    report(8, pass, detail.str());
}

// criterion 9: every accepting color-coded run of criterion 1 carried an
// embedding witness that passes the checker.
void criterion_9(const SolverStats& stats) {
    bool pass = stats.witnesses_checked > 0 && stats.witnesses_checked == stats.witnesses_valid;
    std::ostringstream detail;
    detail << "color-coded witnesses: " << stats.witnesses_valid << "/" << stats.witnesses_checked
           << " extracted embeddings verified (" << stats.first_loop_accepts
           << " first-loop accepts)";
    report(9, pass, detail.str());
}

// criterion 10: verify reports are byte-identical across runs.
void criterion_10() {
    VerificationConfig cfg;
    cfg.seed = 7;
    cfg.instance_count = 10;
    cfg.max_k = 5;
    cfg.max_n = 7;
    std::string a = verification_report_to_json(run_verification(cfg)).dump(2);
    std::string b = verification_report_to_json(run_verification(cfg)).dump(2);
    std::ostringstream detail;
    detail << "determinism: two seeded verify runs are " << (a == b ? "byte-identical" : "DIFFERENT")
           << " (" << a.size() << " bytes)";
    report(10, a == b, detail.str());
}

} // namespace

int main() {
    SolverStats stats1 = criterion_1();
    criterion_2();
    criterion_3_4(3, 1, 2);
    criterion_3_4(4, 2, 3);
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(stats1);
    criterion_10();

    int failed = 0;
    for (const auto& o : outcomes)
        if (!o.pass) ++failed;
    std::printf("summary: %d/%d criteria pass\n", static_cast<int>(outcomes.size()) - failed,
                static_cast<int>(outcomes.size()));
    return failed;
}
