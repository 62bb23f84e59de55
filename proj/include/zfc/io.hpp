#pragma once

#include <json.hpp>

#include <string>

#include "zfc/controllability.hpp"

namespace zfc {

using Json = nlohmann::json;

struct GraphInput {
    DirectedGraph graph;
    GraphKind kind = GraphKind::LoopDirected;
};

// {"n": 3, "kind": "loop-directed" | "simple-directed", "edges": [[1,1], ...]}.
// "kind" defaults to loop-directed. Throws InputError on malformed input,
// including loops in a simple-directed graph.
GraphInput parse_graph_json(const std::string& text);
Json graph_to_json(const DirectedGraph& g, GraphKind kind);

// {"edges": [[row, col], ...]}; an optional "constrained" field is ignored.
Matching parse_matching_json(const std::string& text);

// "1,2,3" -> {1, 2, 3}. An empty string gives the empty set.
VertexSet parse_vertex_list(const std::string& text);

// Reads a file, or standard input when path is "-".
std::string read_input(const std::string& path);

Json vertex_set_to_json(const VertexSet& s);
Json forces_to_json(const ForceList& forces);
Json matching_edges_to_json(const Matching& m);

// {"complete": bool, "black": [...], "forces": [[f, t], ...]}
Json propagation_to_json(const PropagationResult& result);
// {"edges": [[row, col], ...], "constrained": bool}
Json matching_to_json(const Matching& m, bool constrained);
Json report_to_json(const StrongControllabilityReport& report);
Json kalman_to_json(const KalmanReport& report);
Json min_input_to_json(const MinInputSet& result);

// "2 -> 3, 1 -> 2"
std::string forces_to_text(const ForceList& forces);
// "{1, 2}"
std::string vertex_set_to_text(const VertexSet& s);
// "(3,2) (2,1)"
std::string matching_to_text(const Matching& m);

}  // namespace zfc
