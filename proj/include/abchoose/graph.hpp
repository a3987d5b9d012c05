#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace abch {

using Vertex = int;
using Color = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

struct Arc {
    Vertex from = 0;
    Vertex to = 0;
    auto operator<=>(const Arc&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted, so iteration order over neighbours is
/// always ascending. Edges are stored once; `edges()` reports them with
/// u < v in lexicographic order, which is the canonical form used by every
/// serializer in the project.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on loops, out-of-range endpoints or
    /// repeated pairs.
    Graph(int n, std::span<const Edge> edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const { return num_edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    int min_degree() const;
    bool has_edge(Vertex u, Vertex v) const;
    std::vector<Edge> edges() const;

    /// Inserts {u,v}; returns false when the edge is already present.
    bool add_edge(Vertex u, Vertex v);

    /// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
    Graph induced(std::span<const Vertex> vertices) const;

    bool is_connected() const;
    /// Connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<Vertex>> components() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t num_edges_ = 0;
};

/// Directed graph without loops and with at most one arc per ordered pair.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Arc> arcs);

    int num_vertices() const { return static_cast<int>(out_.size()); }
    std::size_t num_arcs() const { return num_arcs_; }
    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
    int max_out_degree() const;
    bool has_arc(Vertex from, Vertex to) const;
    std::vector<Arc> arcs() const;

    bool add_arc(Vertex from, Vertex to);

    Digraph induced(std::span<const Vertex> vertices) const;
    /// Underlying simple graph; antiparallel arcs collapse to one edge.
    Graph underlying() const;
    bool is_acyclic() const;
    /// True when every edge of `g` carries exactly one arc and no other arcs exist.
    bool is_orientation_of(const Graph& g) const;

    bool operator==(const Digraph&) const = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t num_arcs_ = 0;
};

/// Exact non-negative fraction kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::int64_t ceil() const { return (num + den - 1) / den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

/// Number of edges with both endpoints in `vertices`.
std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices);

}  // namespace abch
