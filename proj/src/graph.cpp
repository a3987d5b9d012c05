#include "abchoose/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace abch {

namespace {

bool sorted_insert(std::vector<Vertex>& list, Vertex v)
{
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) return false;
    list.insert(it, v);
    return true;
}

bool sorted_contains(const std::vector<Vertex>& list, Vertex v)
{
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> induced_index(int n, std::span<const Vertex> vertices)
{
    std::vector<Vertex> index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v < 0 || v >= n) throw std::invalid_argument("induced: vertex " + std::to_string(v) + " out of range");
        if (index[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("induced: vertex " + std::to_string(v) + " listed twice");
        index[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
    }
    return index;
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n)
{
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const Edge& e : edges) {
        if (!add_edge(e.u, e.v)) {
            throw std::invalid_argument("graph: duplicate edge [" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "]");
        }
    }
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= num_vertices())
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(num_vertices()) + ")");
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const
{
    if (adj_.empty()) return 0;
    int d = num_vertices();
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    return a.size() <= b.size() ? sorted_contains(a, v) : sorted_contains(b, u);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (!sorted_insert(adj_[static_cast<std::size_t>(u)], v)) return false;
    sorted_insert(adj_[static_cast<std::size_t>(v)], u);
    ++num_edges_;
    return true;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    const auto index = induced_index(num_vertices(), vertices);
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : neighbors(vertices[i])) {
            Vertex j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) h.add_edge(static_cast<Vertex>(i), j);
        }
    return h;
}

std::vector<std::vector<Vertex>> Graph::components() const
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(adj_.size(), 0);
    for (Vertex s = 0; s < num_vertices(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected() const
{
    return num_vertices() <= 1 || components().size() == 1;
}

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(int n)
{
    if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
    out_.resize(static_cast<std::size_t>(n));
    in_.resize(static_cast<std::size_t>(n));
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n)
{
    for (const Arc& a : arcs)
        if (!add_arc(a.from, a.to))
            throw std::invalid_argument("digraph: duplicate arc [" + std::to_string(a.from) + "," +
                                        std::to_string(a.to) + "]");
}

void Digraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= num_vertices())
        throw std::invalid_argument("digraph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(num_vertices()) + ")");
}

int Digraph::max_out_degree() const
{
    int d = 0;
    for (const auto& a : out_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Digraph::has_arc(Vertex from, Vertex to) const
{
    if (from < 0 || to < 0 || from >= num_vertices() || to >= num_vertices()) return false;
    return sorted_contains(out_[static_cast<std::size_t>(from)], to);
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> out;
    out.reserve(num_arcs_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : out_neighbors(u)) out.push_back({u, v});
    return out;
}

bool Digraph::add_arc(Vertex from, Vertex to)
{
    check_vertex(from);
    check_vertex(to);
    if (from == to) throw std::invalid_argument("digraph: loop at vertex " + std::to_string(from));
    if (!sorted_insert(out_[static_cast<std::size_t>(from)], to)) return false;
    sorted_insert(in_[static_cast<std::size_t>(to)], from);
    ++num_arcs_;
    return true;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const
{
    const auto index = induced_index(num_vertices(), vertices);
    Digraph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : out_neighbors(vertices[i])) {
            Vertex j = index[static_cast<std::size_t>(w)];
            if (j >= 0) h.add_arc(static_cast<Vertex>(i), j);
        }
    return h;
}

Graph Digraph::underlying() const
{
    Graph g(num_vertices());
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : out_neighbors(u)) g.add_edge(u, v);
    return g;
}

bool Digraph::is_acyclic() const
{
    // Kahn's algorithm.
    std::vector<int> indeg(out_.size());
    for (std::size_t v = 0; v < in_.size(); ++v) indeg[v] = static_cast<int>(in_[v].size());
    std::queue<Vertex> q;
    for (Vertex v = 0; v < num_vertices(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
    int removed = 0;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        ++removed;
        for (Vertex w : out_neighbors(v))
            if (--indeg[static_cast<std::size_t>(w)] == 0) q.push(w);
    }
    return removed == num_vertices();
}

bool Digraph::is_orientation_of(const Graph& g) const
{
    if (g.num_vertices() != num_vertices() || g.num_edges() != num_arcs()) return false;
    for (const Arc& a : arcs()) {
        if (!g.has_edge(a.from, a.to) || has_arc(a.to, a.from)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const
{
    return num * o.den <=> o.num * den;
}

std::string Rational::to_string() const
{
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : vertices) in[static_cast<std::size_t>(v)] = 1;
    std::size_t twice = 0;
    for (Vertex v : vertices)
        for (Vertex w : g.neighbors(v)) twice += in[static_cast<std::size_t>(w)];
    return twice / 2;
}

}  // namespace abch
