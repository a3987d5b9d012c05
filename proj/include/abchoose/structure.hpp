#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abchoose/graph.hpp"

namespace abch {

// ------------------------------------------------------------------ core

struct CoreResult {
    Graph core;
    /// Original ids of the surviving vertices, ascending; core vertex i is vertices[i].
    std::vector<Vertex> vertices;
};

/// Repeatedly deletes a degree-1 vertex (lowest index first) until none is left.
CoreResult core_of(const Graph& g);

enum class CoreShape { SingleVertex, EvenCycle, ThetaTwoTwoEven, OddCycle, OtherTheta, Other };

const char* to_string(CoreShape s);

struct TwoChoosabilityReport {
    bool choosable = false;
    CoreShape shape = CoreShape::Other;
    std::string certificate;
    CoreResult core;
};

/// Recognises the cores K1, C_{2m+2} and Theta_{2,2,2m} (m >= 1).
/// Throws std::invalid_argument for a disconnected graph.
TwoChoosabilityReport classify_two_choosable(const Graph& g);

// ------------------------------------------------------------ degeneracy

struct DegeneracyResult {
    int degeneracy = 0;
    /// Elimination order: order[0] is removed first.
    std::vector<Vertex> order;
    /// Every edge points from the endpoint eliminated earlier to the later one,
    /// so the orientation is acyclic with out-degrees bounded by `degeneracy`.
    Digraph orientation;
};

DegeneracyResult degeneracy(const Graph& g);

// --------------------------------------------------------------- density

struct DensityReport {
    /// max |E(H)| / |V(H)| over nonempty subgraphs H.
    Rational value;
    /// Vertex set (ascending) whose induced subgraph attains `value`.
    std::vector<Vertex> witness;
};

inline constexpr int kBruteForceDensityLimit = 20;

/// Exhaustive search for n <= kBruteForceDensityLimit, otherwise the flow route.
/// Throws std::invalid_argument for the empty graph.
DensityReport max_density(const Graph& g);
DensityReport max_density_brute_force(const Graph& g);
/// Parametric max-closure search: start from the whole graph and repeatedly
/// replace the current density p/q by the density of a subgraph maximising
/// q|E(H)| - p|V(H)|, until no subgraph beats it. Exact in integer arithmetic.
DensityReport max_density_flow(const Graph& g);

struct OrientationResult {
    std::optional<Digraph> orientation;
    /// Set when infeasible: a subgraph of density greater than d.
    std::optional<DensityReport> dense_witness;
    bool feasible() const { return orientation.has_value(); }
};

/// An orientation with all out-degrees <= d exists iff max density <= d.
OrientationResult orient_max_outdegree(const Graph& g, int d);

// ------------------------------------------------------ structure queries

struct Bipartition {
    bool bipartite = false;
    /// 0/1 side per vertex; the smallest vertex of each component is on side 0.
    std::vector<int> side;
    /// Odd cycle (as a vertex sequence) when not bipartite.
    std::vector<Vertex> odd_cycle;
};

Bipartition bipartition(const Graph& g);

struct Chordality {
    bool chordal = false;
    /// Perfect elimination order (simplicial vertex removed first) when chordal.
    std::vector<Vertex> elimination_order;
    /// Chordless cycle of length >= 4 when not chordal.
    std::vector<Vertex> chordless_cycle;
};

Chordality chordality(const Graph& g);
bool is_simplicial(const Graph& g, Vertex v);

/// A maximum clique, ascending.
std::vector<Vertex> maximum_clique(const Graph& g);

/// Vertex i of the result is edge i of g.edges().
Graph line_graph(const Graph& g);

struct StructureReport {
    Bipartition bipartition;
    Chordality chordality;
    int clique_number = 0;
    std::vector<Vertex> max_clique;
    Graph line_graph;
};

StructureReport structure_queries(const Graph& g);

// ---------------------------------------------------------- digraph SCCs

struct StrongComponent {
    std::vector<Vertex> vertices;  // ascending
    bool bipartite = true;
    /// Side (0/1) for each entry of `vertices`; every internal arc crosses sides.
    std::vector<int> side;
    /// Simple directed cycle of odd length when the component is not bipartite.
    std::vector<Vertex> odd_cycle;
};

struct SccReport {
    /// Reverse topological order: every arc between components goes from a
    /// later entry to an earlier one.
    std::vector<StrongComponent> components;
    std::vector<int> component_of;

    /// First odd directed cycle found, empty if there is none.
    std::vector<Vertex> odd_cycle() const;
};

SccReport scc_and_directed_bipartition(const Digraph& d);

}  // namespace abch
