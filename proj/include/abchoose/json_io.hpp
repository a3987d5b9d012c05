#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abchoose/gadgets.hpp"
#include "abchoose/graph.hpp"
#include "abchoose/lists.hpp"

namespace abch {

using Json = nlohmann::ordered_json;

/// Raised for malformed input; the message names the offending field or position.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"n": <int>, "edges": [[u,v], ...]} with u < v, edges sorted.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Graph parse_graph(std::string_view text);
/// Compact canonical form; parse_graph(emit_graph(g)) == g.
std::string emit_graph(const Graph& g);

/// {"n": <int>, "arcs": [[from,to], ...]}.
Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

/// {"<vertex>": [colours...], ...} keyed by every vertex 0..n-1.
Json color_sets_to_json(const std::vector<std::vector<Color>>& sets);
std::vector<std::vector<Color>> color_sets_from_json(const Json& j, int n, const char* field);

/// {"lists": {...}}.
Json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Json& j, int n);
/// {"choice": {...}}.
Json choice_to_json(const Choice& c);

/// {"sets": [[...], ...]}.
std::vector<std::vector<int>> family_from_json(const Json& j);
Json family_to_json(const std::vector<std::vector<int>>& fam);

/// {"blocks": [[...], ...], "k": <int>}; k is optional on input.
std::vector<std::vector<Vertex>> blocks_from_json(const Json& j);
Json blocks_to_json(const std::vector<std::vector<Vertex>>& blocks, int k);

/// Graph JSON plus "labels" ({"<vertex>": "copy:vertex" | "copy_i,copy_j:vertex" | apex name})
/// and "side" for bipartite gadgets.
Json gadget_to_json(const GadgetOutput& out);

/// Graphviz text. Vertex i may carry an extra label, e.g. its colour.
std::string to_dot(const Graph& g, const std::vector<std::string>& vertex_labels = {});
std::string to_dot(const Digraph& d);

/// DIMACS edge format ("p edge n m", "e u v" 1-based, "c" comments).
/// Repeated edges, common in DIMACS files, are merged.
Graph parse_dimacs(std::string_view text);

/// Parses JSON text, reporting the byte offset of a syntax error.
Json parse_json(std::string_view text);

}  // namespace abch
