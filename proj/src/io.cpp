#include "pse/io.hpp"

#include <fstream>
#include <sstream>

#include "pse/errors.hpp"

namespace pse {

Structure structure_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("structure: top level must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "vocabulary" && key != "universe" && key != "relations")
            throw ParseError("structure: unknown field '" + key + "'");
    if (!j.contains("vocabulary") || !j.contains("universe"))
        throw ParseError("structure: missing 'vocabulary' or 'universe'");

    std::map<std::string, int> symbols;
    if (!j["vocabulary"].is_object()) throw ParseError("structure: 'vocabulary' must be an object");
    for (const auto& [name, arity] : j["vocabulary"].items()) {
        if (!arity.is_number_integer()) throw ParseError("structure: arity must be an integer");
        symbols[name] = arity.get<int>();
    }

    if (!j["universe"].is_array()) throw ParseError("structure: 'universe' must be an array");
    std::vector<std::string> universe;
    for (const auto& e : j["universe"]) {
        if (!e.is_string()) throw ParseError("structure: universe elements must be strings");
        universe.push_back(e.get<std::string>());
    }

    RelationMap relations;
    if (j.contains("relations")) {
        if (!j["relations"].is_object()) throw ParseError("structure: 'relations' must be an object");
        for (const auto& [symbol, tuples] : j["relations"].items()) {
            if (!tuples.is_array()) throw ParseError("structure: relation '" + symbol + "' must be an array");
            auto& out = relations[symbol];
            for (const auto& t : tuples) {
                if (!t.is_array()) throw ParseError("structure: tuples must be arrays");
                Tuple tuple;
                for (const auto& e : t) {
                    if (!e.is_string()) throw ParseError("structure: tuple components must be strings");
                    tuple.push_back(e.get<std::string>());
                }
                if (!out.insert(tuple).second)
                    throw ParseError("structure: duplicate tuple in relation '" + symbol + "'");
            }
        }
    }

    try {
        return Structure::validate(Vocabulary::make(std::move(symbols)), std::move(universe),
                                   std::move(relations));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

Structure parse_structure(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("structure: malformed JSON: ") + e.what());
    }
    return structure_from_json(j);
}

Json structure_to_json(const Structure& s) {
    Json j;
    Json vocab = Json::object();
    for (const auto& [name, arity] : s.vocabulary().symbols()) vocab[name] = arity;
    j["vocabulary"] = std::move(vocab);
    j["universe"] = s.universe();
    Json rels = Json::object();
    for (const auto& [symbol, tuples] : s.relations()) {
        Json arr = Json::array();
        for (const Tuple& t : tuples) arr.push_back(t);
        rels[symbol] = std::move(arr);
    }
    j["relations"] = std::move(rels);
    return j;
}

std::string serialize_structure(const Structure& s) { return structure_to_json(s).dump(2) + "\n"; }

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    long n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("graph: expected header 'n m'");
    if (n < 0 || m < 0) throw ParseError("graph: negative counts in header");
    Graph g = Graph::with_n(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u = -1, v = -1;
        if (!(in >> u >> v)) throw ParseError("graph: expected " + std::to_string(m) + " edges");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("graph: vertex out of range");
        if (u == v) throw ParseError("graph: self-loop");
        if (!g.insert_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("graph: duplicate edge");
    }
    std::string rest;
    if (in >> rest) throw ParseError("graph: trailing input");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.size() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Json analysis_report_to_json(const AnalysisReport& r) {
    Json j;
    j["per_edge_degree"] = r.per_edge_degree;
    j["unfoldability_degree"] = r.unfoldability_degree;
    j["unfoldable_edges"] = r.unfoldable_edges;
    j["critical_edges"] = r.critical_edges;
    j["max_edge_degree"] = r.max_edge_degree;
    if (r.alternating_tail_C)
        j["alternating_tail_C"] = *r.alternating_tail_C;
    else
        j["alternating_tail_C"] = nullptr;
    return j;
}

Json classify_report_to_json(const ClassifyReport& r) {
    Json j;
    Json reports = Json::array();
    for (const auto& rep : r.reports) reports.push_back(analysis_report_to_json(rep));
    j["reports"] = std::move(reports);
    j["bound"] = r.bound;
    j["verdict"] = r.verdict;
    j["all_oriented"] = r.all_oriented;
    j["common_tail_constant"] =
        r.common_tail_constant ? Json(*r.common_tail_constant) : Json(nullptr);
    j["common_tail_within_bound"] =
        r.common_tail_within_bound ? Json(*r.common_tail_within_bound) : Json(nullptr);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + path + "'");
    out << content;
}

} // namespace pse
