#include "zfc/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "zfc/error.hpp"

namespace zfc {

namespace {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

int as_int(const Json& value, const char* what) {
    if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return value.get<int>();
}

std::pair<int, int> as_pair(const Json& value, const char* what) {
    if (!value.is_array() || value.size() != 2) {
        throw InputError(std::string(what) + " must be a two-element array");
    }
    return {as_int(value[0], what), as_int(value[1], what)};
}

}  // namespace

GraphInput parse_graph_json(const std::string& text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("graph JSON must be an object");
    if (!doc.contains("n")) throw InputError("graph JSON needs \"n\"");
    const int n = as_int(doc["n"], "\"n\"");
    GraphKind kind = GraphKind::LoopDirected;
    if (doc.contains("kind")) {
        if (!doc["kind"].is_string()) throw InputError("\"kind\" must be a string");
        kind = parse_graph_kind(doc["kind"].get<std::string>());
    }
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
        for (const auto& e : doc["edges"]) edges.push_back(as_pair(e, "edge"));
    }
    GraphInput input{DirectedGraph(n, edges), kind};
    require_kind(input.graph, kind);
    return input;
}

Json graph_to_json(const DirectedGraph& g, GraphKind kind) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.size()}, {"kind", std::string(to_string(kind))}, {"edges", edges}};
}

Matching parse_matching_json(const std::string& text) {
    const Json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
        throw InputError("matching JSON needs an \"edges\" array");
    }
    Matching m;
    for (const auto& e : doc["edges"]) m.push_back(as_pair(e, "matching edge"));
    return canonical(std::move(m));
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (text.find_first_not_of(" \t") == std::string::npos) break;
            throw InputError("empty entry in vertex list '" + text + "'");
        }
        const auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || used == 0) throw InputError("not a vertex id: '" + token + "'");
        if (!out.insert(v).second) throw InputError("vertex " + token + " listed twice");
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json vertex_set_to_json(const VertexSet& s) { return Json(std::vector<int>(s.begin(), s.end())); }

Json forces_to_json(const ForceList& forces) {
    Json out = Json::array();
    for (const auto& f : forces) out.push_back({f.forcer, f.forced});
    return out;
}

Json matching_edges_to_json(const Matching& m) {
    Json out = Json::array();
    for (const auto& [r, c] : m) out.push_back({r, c});
    return out;
}

Json propagation_to_json(const PropagationResult& result) {
    return {{"complete", result.complete}, {"black", vertex_set_to_json(result.black)},
            {"forces", forces_to_json(result.forces)}};
}

Json matching_to_json(const Matching& m, bool constrained) {
    return {{"edges", matching_edges_to_json(canonical(m))}, {"constrained", constrained}};
}

Json report_to_json(const StrongControllabilityReport& report) {
    Json out{{"verdict", report.verdict},
             {"method", report.method},
             {"input", vertex_set_to_json(report.inputs)},
             {"failure", report.failure.empty() ? Json(nullptr) : Json(report.failure)}};
    if (report.propagation) out["propagation"] = propagation_to_json(*report.propagation);
    if (report.method == "zero-forcing") {
        out["loop_free_forces"] = report.loop_free_forces ? forces_to_json(*report.loop_free_forces) : Json(nullptr);
    }
    if (report.pattern_matching) out["pattern_matching"] = matching_edges_to_json(*report.pattern_matching);
    if (report.crossed_matching) out["crossed_matching"] = matching_edges_to_json(*report.crossed_matching);
    return out;
}

Json kalman_to_json(const KalmanReport& report) {
    Json out{{"samples", report.samples},
             {"seed", report.seed},
             {"controllable", report.controllable},
             {"strong_verdict", report.strong_verdict},
             {"first_uncontrollable", nullptr}};
    if (report.first_uncontrollable) {
        out["first_uncontrollable"] = {{"A", report.first_uncontrollable->first.to_text()},
                                       {"B", report.first_uncontrollable->second.to_text()}};
    }
    return out;
}

Json min_input_to_json(const MinInputSet& result) {
    return {{"size", result.size}, {"witness", vertex_set_to_json(result.witness)}, {"method", result.method}};
}

std::string forces_to_text(const ForceList& forces) {
    std::string out;
    for (std::size_t i = 0; i < forces.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(forces[i].forcer) + " -> " + std::to_string(forces[i].forced);
    }
    return out;
}

std::string vertex_set_to_text(const VertexSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ", ";
        out += std::to_string(*it);
    }
    return out + "}";
}

std::string matching_to_text(const Matching& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out += " ";
        out += "(" + std::to_string(m[i].first) + "," + std::to_string(m[i].second) + ")";
    }
    return out;
}

}  // namespace zfc
