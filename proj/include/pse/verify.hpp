#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pse/io.hpp"
#include "pse/reductions.hpp"
#include "pse/rng.hpp"
#include "pse/solvers.hpp"

namespace pse {

/// Seeded configuration of the verification harness.
struct VerificationConfig {
    std::uint64_t seed = 1;
    int instance_count = 10;
    int max_k = 5;                                          // structure size cap, >= 3
    int max_n = 7;                                          // target size cap, >= max_k
    std::vector<std::string> families = {"1", "2", "3", "4", "pkl"};
    std::vector<std::string> methods = {"ac", "tail"};
    SolverConfig solver;
};

struct CheckResult {
    std::string name;
    int pass = 0;
    int fail = 0;
    std::optional<Json> counterexample; // first failure, in re-runnable input formats
};

struct VerificationReport {
    VerificationConfig config;
    std::vector<CheckResult> checks;
    std::vector<double> timings_ms; // aligned with checks; kept out of the JSON
    bool all_pass = true;
};

/// Runs the oracle-equivalence and analysis checks:
///   ac_vs_brute        algorithm_AC against brute_force_embedding
///   tail_vs_brute      algorithm_B against the oracle on oriented tails
///   ustcon_roundtrip   ustcon answer == embedding answer on the gadget (cases 1 and 2)
///   longshort_roundtrip long-short answer == embedding answer on (P_{k,l}, G')
///   analysis_facts     example-family degrees, critical counts, the critical bound
/// Deterministic given the seed. Timing is reported separately by the
/// CLI, never inside the report.
VerificationReport run_verification(const VerificationConfig& cfg);

Json verification_report_to_json(const VerificationReport& report);

/// Random rooted oriented path on k points whose alternating-tail
/// constant is at most c_max.
RootedPathStructure random_oriented_tail_path(Rng& rng, int k, int c_max);

/// Random target for P: with probability 1/2 a planted copy of P plus
/// uniform noise tuples, otherwise noise only.
Structure random_target(Rng& rng, const RootedPathStructure& p, int max_n);

/// Erdos-Renyi graph with edge probability 2/n.
Graph random_graph(Rng& rng, int n);

} // namespace pse
