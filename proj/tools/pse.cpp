#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pse/analysis.hpp"
#include "pse/errors.hpp"
#include "pse/io.hpp"
#include "pse/reductions.hpp"
#include "pse/solvers.hpp"
#include "pse/verify.hpp"

namespace {

using namespace pse;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

void emit_decision(bool yes) { std::cout << (yes ? "yes" : "no") << "\n"; }

RootedPathStructure load_path_structure(const std::string& path) {
    return as_rooted_path(parse_structure(read_file(path)));
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string piece;
    for (char c : csv) {
        if (c == ',') {
            if (!piece.empty()) out.push_back(piece);
            piece.clear();
        } else {
            piece += c;
        }
    }
    if (!piece.empty()) out.push_back(piece);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"rooted path structure embedding toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    SolverConfig solver;
    app.add_option("--seed", seed, "seed for randomized verification");
    app.add_option("--k-max", solver.k_max, "color-coding size cap (larger inputs use brute force)");
    app.add_option("--log-base-multiplier", solver.log_multiplier,
                   "multiplier widening the hash-family prime bound");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "structural report per structure");
    std::vector<std::string> analyze_files;
    std::string analyze_out;
    analyze_cmd->add_option("files", analyze_files, "structure JSON files")->required();
    analyze_cmd->add_option("-o", analyze_out, "output path (default stdout)");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "sample classification against a bound");
    std::vector<std::string> classify_files;
    std::string classify_out;
    long classify_bound = 0;
    classify_cmd->add_option("--bound", classify_bound, "unfoldability-degree bound")->required();
    classify_cmd->add_option("files", classify_files, "structure JSON files")->required();
    classify_cmd->add_option("-o", classify_out, "output path (default stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "decision procedures");
    solve_cmd->require_subcommand(1);

    auto* emb_cmd = solve_cmd->add_subcommand("emb", "does P embed into B?");
    std::string emb_p, emb_b, emb_method = "brute";
    emb_cmd->add_option("P", emb_p, "pattern structure JSON")->required();
    emb_cmd->add_option("B", emb_b, "target structure JSON")->required();
    emb_cmd->add_option("--method", emb_method, "brute | ac | tail")
        ->check(CLI::IsMember({"brute", "ac", "tail"}));

    auto* longshort_cmd = solve_cmd->add_subcommand("longshort", "long path or exact-length path");
    std::string ls_graph, ls_s, ls_t;
    long ls_k = 0, ls_l = 1;
    longshort_cmd->add_option("G", ls_graph, "edge-list file")->required();
    longshort_cmd->add_option("s", ls_s)->required();
    longshort_cmd->add_option("t", ls_t)->required();
    longshort_cmd->add_option("k", ls_k)->required();
    longshort_cmd->add_option("l", ls_l)->required();

    auto* ustcon_cmd = solve_cmd->add_subcommand("ustcon", "s-t path of bounded length");
    std::string uc_graph, uc_s, uc_t;
    long uc_l = 0;
    ustcon_cmd->add_option("G", uc_graph, "edge-list file")->required();
    ustcon_cmd->add_option("s", uc_s)->required();
    ustcon_cmd->add_option("t", uc_t)->required();
    ustcon_cmd->add_option("l", uc_l)->required();

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "instance reductions");
    reduce_cmd->require_subcommand(1);

    auto* r1_cmd = reduce_cmd->add_subcommand("ustcon-to-emb", "ustcon to embedding");
    std::string r1_graph, r1_s, r1_t;
    long r1_l = 0;
    int r1_family = 2, r1_case = 1;
    std::vector<std::string> r1_out;
    r1_cmd->add_option("G", r1_graph, "edge-list file")->required();
    r1_cmd->add_option("s", r1_s)->required();
    r1_cmd->add_option("t", r1_t)->required();
    r1_cmd->add_option("l", r1_l)->required();
    r1_cmd->add_option("--family", r1_family, "supply family (1..4)")->check(CLI::Range(1, 4));
    r1_cmd->add_option("--case", r1_case, "selection case (1|2)")->check(CLI::Range(1, 2));
    r1_cmd->add_option("-o", r1_out, "output paths: P.json B.json")->expected(2)->required();

    auto* r2_cmd = reduce_cmd->add_subcommand("longshort-to-emb", "long-short to embedding");
    std::string r2_graph, r2_s, r2_t;
    long r2_k = 0, r2_l = 1;
    std::vector<std::string> r2_out;
    r2_cmd->add_option("G", r2_graph, "edge-list file")->required();
    r2_cmd->add_option("s", r2_s)->required();
    r2_cmd->add_option("t", r2_t)->required();
    r2_cmd->add_option("k", r2_k)->required();
    r2_cmd->add_option("l", r2_l)->required();
    r2_cmd->add_option("-o", r2_out, "output paths: P.json Bprime.json")->expected(2)->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "example family generators");
    std::string gen_which;
    int gen_size = 0;
    std::string gen_out;
    gen_cmd->add_option("family", gen_which, "family1 | family2 | family3 | family4")->required();
    gen_cmd->add_option("size", gen_size, "number of elements (>= 3)")->required();
    gen_cmd->add_option("-o", gen_out, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "seeded oracle-equivalence harness");
    VerificationConfig vcfg;
    std::string verify_out;
    std::string families_csv = "1,2,3,4,pkl", methods_csv = "ac,tail";
    verify_cmd->add_option("--count", vcfg.instance_count, "instances per check");
    verify_cmd->add_option("--max-k", vcfg.max_k, "structure size cap");
    verify_cmd->add_option("--max-n", vcfg.max_n, "target size cap");
    verify_cmd->add_option("--families", families_csv, "subset of 1,2,3,4,pkl");
    verify_cmd->add_option("--methods", methods_csv, "subset of ac,tail");
    verify_cmd->add_option("-o", verify_out, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*analyze_cmd) {
        Json out = Json::array();
        for (const auto& f : analyze_files)
            out.push_back(analysis_report_to_json(analyze(load_path_structure(f))));
        emit((analyze_files.size() == 1 ? out[0] : out).dump(2) + "\n", analyze_out);
        return 0;
    }

    if (*classify_cmd) {
        std::vector<RootedPathStructure> sample;
        for (const auto& f : classify_files) sample.push_back(load_path_structure(f));
        emit(classify_report_to_json(classify(sample, classify_bound)).dump(2) + "\n",
             classify_out);
        return 0;
    }

    if (*emb_cmd) {
        RootedPathStructure p = load_path_structure(emb_p);
        Structure b = parse_structure(read_file(emb_b));
        bool yes = false;
        if (emb_method == "brute") {
            yes = brute_force_embedding(p.base(), b).has_value();
        } else if (emb_method == "ac") {
            yes = algorithm_AC(p, b, default_longshort_oracle(), solver);
        } else {
            yes = algorithm_B(p, b, alternating_tail_constant(p), solver);
        }
        emit_decision(yes);
        return 0;
    }

    if (*longshort_cmd) {
        Graph g = parse_graph(read_file(ls_graph));
        emit_decision(solve_longshort(make_longshort_instance(g, ls_s, ls_t, ls_k, ls_l)));
        return 0;
    }

    if (*ustcon_cmd) {
        Graph g = parse_graph(read_file(uc_graph));
        emit_decision(solve_ustcon(g, uc_s, uc_t, uc_l));
        return 0;
    }

    if (*r1_cmd) {
        Graph g = parse_graph(read_file(r1_graph));
        auto [p, b] = reduce_ustcon(g, r1_s, r1_t, r1_l, family_supply(r1_family), r1_case);
        write_file(r1_out[0], serialize_structure(p.base()));
        write_file(r1_out[1], serialize_structure(b));
        return 0;
    }

    if (*r2_cmd) {
        Graph g = parse_graph(read_file(r2_graph));
        auto [p, gprime] = reduce_longshort(g, r2_s, r2_t, r2_k, r2_l);
        write_file(r2_out[0], serialize_structure(p.base()));
        write_file(r2_out[1], serialize_structure(gprime));
        return 0;
    }

    if (*gen_cmd) {
        if (gen_which.rfind("family", 0) != 0 || gen_which.size() != 7)
            throw ParseError("gen: expected family1..family4");
        int id = gen_which[6] - '0';
        emit(serialize_structure(gen_family(id, gen_size).base()), gen_out);
        return 0;
    }

    if (*verify_cmd) {
        vcfg.seed = seed;
        vcfg.solver = solver;
        vcfg.families = split_csv(families_csv);
        vcfg.methods = split_csv(methods_csv);

        auto started = std::chrono::steady_clock::now();
        VerificationReport report = run_verification(vcfg);
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();

        emit(verification_report_to_json(report).dump(2) + "\n", verify_out);
        for (size_t i = 0; i < report.checks.size(); ++i)
            std::cerr << report.checks[i].name << ": pass=" << report.checks[i].pass
                      << " fail=" << report.checks[i].fail << " ("
                      << report.timings_ms[i] << " ms)\n";
        std::cerr << "total: " << elapsed << " ms\n";
        return report.all_pass ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
