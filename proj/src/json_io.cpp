#include "abchoose/json_io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace abch {

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object()) throw FormatError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw FormatError(std::string("missing field \"") + name + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& where)
{
    if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
    auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw FormatError(where + ": integer out of range");
    return static_cast<int>(v);
}

std::vector<int> int_array(const Json& j, const std::string& where)
{
    if (!j.is_array()) throw FormatError(where + ": expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

int vertex_count(const Json& j)
{
    int n = as_int(field(j, "n"), "n");
    if (n < 0) throw FormatError("n: must be non-negative");
    return n;
}

template <class Pair>
std::vector<Pair> pairs(const Json& j, const char* name, int n)
{
    const Json& arr = field(j, name);
    if (!arr.is_array()) throw FormatError(std::string(name) + ": expected an array");
    std::vector<Pair> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
        auto p = int_array(arr[i], where);
        if (p.size() != 2) throw FormatError(where + ": expected two vertices");
        for (int v : p)
            if (v < 0 || v >= n)
                throw FormatError(where + ": vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
        if (p[0] == p[1]) throw FormatError(where + ": loop at vertex " + std::to_string(p[0]));
        out.push_back({p[0], p[1]});
    }
    return out;
}

}  // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json graph_to_json(const Graph& g)
{
    Json j;
    j["n"] = g.num_vertices();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j)
{
    const int n = vertex_count(j);
    auto edges = pairs<Edge>(j, "edges", n);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto key = std::minmax(edges[i].u, edges[i].v);
        if (!seen.insert(key).second)
            throw FormatError("edges[" + std::to_string(i) + "]: duplicate edge {" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + "}");
    }
    return Graph(n, edges);
}

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string emit_graph(const Graph& g) { return graph_to_json(g).dump(); }

Json digraph_to_json(const Digraph& d)
{
    Json j;
    j["n"] = d.num_vertices();
    Json arcs = Json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to});
    j["arcs"] = std::move(arcs);
    return j;
}

Digraph digraph_from_json(const Json& j)
{
    const int n = vertex_count(j);
    auto arcs = pairs<Arc>(j, "arcs", n);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (!seen.insert({arcs[i].from, arcs[i].to}).second)
            throw FormatError("arcs[" + std::to_string(i) + "]: duplicate arc " + std::to_string(arcs[i].from) + "->" +
                              std::to_string(arcs[i].to));
    return Digraph(n, arcs);
}

Json color_sets_to_json(const std::vector<std::vector<Color>>& sets)
{
    Json j = Json::object();
    for (std::size_t v = 0; v < sets.size(); ++v) j[std::to_string(v)] = sets[v];
    return j;
}

std::vector<std::vector<Color>> color_sets_from_json(const Json& j, int n, const char* name)
{
    if (!j.is_object()) throw FormatError(std::string(name) + ": expected an object keyed by vertex");
    std::vector<std::vector<Color>> sets(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        int v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(key, &used);
            if (used != key.size()) v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0 || v >= n) throw FormatError(std::string(name) + ": key \"" + key + "\" is not a vertex of the graph");
        const std::string where = std::string(name) + "." + key;
        auto colors = int_array(it.value(), where);
        std::vector<int> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw FormatError(where + ": repeated colour");
        if (!sorted.empty() && sorted.front() < 0) throw FormatError(where + ": colours must be non-negative");
        sets[static_cast<std::size_t>(v)] = std::move(sorted);
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw FormatError(std::string(name) + ": vertex " + std::to_string(v) + " has no entry");
    return sets;
}

Json lists_to_json(const ListAssignment& lists)
{
    Json j;
    j["lists"] = color_sets_to_json(lists.sets());
    return j;
}

ListAssignment lists_from_json(const Json& j, int n) { return ListAssignment(color_sets_from_json(field(j, "lists"), n, "lists")); }

Json choice_to_json(const Choice& c)
{
    Json j;
    j["choice"] = color_sets_to_json(c.sets());
    return j;
}

std::vector<std::vector<int>> family_from_json(const Json& j)
{
    const Json& arr = field(j, "sets");
    if (!arr.is_array()) throw FormatError("sets: expected an array");
    std::vector<std::vector<int>> fam;
    for (std::size_t i = 0; i < arr.size(); ++i) fam.push_back(int_array(arr[i], "sets[" + std::to_string(i) + "]"));
    return fam;
}

Json family_to_json(const std::vector<std::vector<int>>& fam)
{
    Json j;
    j["sets"] = fam;
    return j;
}

std::vector<std::vector<Vertex>> blocks_from_json(const Json& j)
{
    const Json& arr = field(j, "blocks");
    if (!arr.is_array()) throw FormatError("blocks: expected an array");
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t i = 0; i < arr.size(); ++i) blocks.push_back(int_array(arr[i], "blocks[" + std::to_string(i) + "]"));
    return blocks;
}

Json blocks_to_json(const std::vector<std::vector<Vertex>>& blocks, int k)
{
    Json j;
    j["blocks"] = blocks;
    j["k"] = k;
    return j;
}

Json gadget_to_json(const GadgetOutput& out)
{
    Json j = graph_to_json(out.graph);
    Json labels = Json::object();
    for (std::size_t v = 0; v < out.labels.size(); ++v) labels[std::to_string(v)] = out.labels[v].to_string();
    j["labels"] = std::move(labels);
    if (!out.side.empty()) j["side"] = out.side;
    return j;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& vertex_labels)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        os << "  " << v;
        if (static_cast<std::size_t>(v) < vertex_labels.size() && !vertex_labels[static_cast<std::size_t>(v)].empty())
            os << " [label=\"" << v << ": " << vertex_labels[static_cast<std::size_t>(v)] << "\"]";
        os << ";\n";
    }
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const Digraph& d)
{
    std::ostringstream os;
    os << "digraph G {\n";
    for (Vertex v = 0; v < d.num_vertices(); ++v) os << "  " << v << ";\n";
    for (const Arc& a : d.arcs()) os << "  " << a.from << " -> " << a.to << ";\n";
    os << "}\n";
    return os.str();
}

Graph parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::set<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        const std::string where = "line " + std::to_string(lineno);
        if (tag == "p") {
            std::string format;
            long long m = 0;
            if (n >= 0) throw FormatError(where + ": second problem line");
            if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0)
                throw FormatError(where + ": expected \"p edge <n> <m>\"");
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (n < 0) throw FormatError(where + ": edge before the problem line");
            if (!(ls >> u >> v)) throw FormatError(where + ": expected \"e <u> <v>\"");
            if (u < 1 || u > n || v < 1 || v > n)
                throw FormatError(where + ": vertex out of range 1.." + std::to_string(n));
            if (u == v) throw FormatError(where + ": loop at vertex " + std::to_string(u));
            edges.insert(std::minmax(u - 1, v - 1));
        } else {
            throw FormatError(where + ": unknown line type \"" + tag + "\"");
        }
    }
    if (n < 0) throw FormatError("DIMACS input has no problem line");
    std::vector<Edge> list;
    for (auto [u, v] : edges) list.push_back({u, v});
    return Graph(n, list);
}

}  // namespace abch
