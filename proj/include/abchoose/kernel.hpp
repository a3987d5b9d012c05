#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/lists.hpp"

namespace abch {

/// Raised when an algorithm that needs a digraph free of odd directed cycles
/// meets one. The offending cycle is attached.
class OddDirectedCycleError : public std::invalid_argument {
public:
    explicit OddDirectedCycleError(std::vector<Vertex> cycle);
    const std::vector<Vertex>& cycle() const { return cycle_; }

private:
    std::vector<Vertex> cycle_;
};

/// Independent set K such that every vertex outside K has an out-neighbour in K.
bool is_kernel(const Digraph& d, std::span<const Vertex> k);

/// Kernel of a digraph without odd directed cycles.
///
/// Strong components are handled sink-first. Vertices already dominated by
/// the partial kernel are dropped; an untouched component contributes the
/// side of its directed bipartition holding its smallest vertex (a single
/// vertex contributes itself); a partially dominated component is solved
/// recursively on its undominated part. The result is checked against the
/// kernel definition before it is returned.
std::vector<Vertex> find_kernel(const Digraph& d);

struct KernelChoiceResult {
    Choice choice;
    /// Colours processed; never exceeds k * n.
    std::size_t iterations = 0;
};

/// k colours per vertex from lists of size >= k(outdeg(v)+1), adjacent sets disjoint.
///
/// Colours are processed in increasing order. For colour c, the vertices
/// still short of k colours whose list contains c form an induced subdigraph;
/// every vertex of its kernel takes c.
KernelChoiceResult kernel_list_choice(const Digraph& d, const ListAssignment& lists, int k);

enum class OrientationRoute {
    Degeneracy,        ///< acyclic, out-degree <= degeneracy
    Chordal,           ///< perfect elimination order, out-degree <= omega - 1
    BipartiteDensity,  ///< bipartite graph, out-degree <= ceil(max density)
};

struct RouteOrientation {
    Digraph orientation;
    /// Out-degree bound the route guarantees; lists need k(bound+1) colours.
    int bound = 0;
};

RouteOrientation route_orientation(const Graph& g, OrientationRoute route);

Choice choice_via_orientation(const Graph& g, OrientationRoute route, const ListAssignment& lists, int k);
/// Caller-supplied orientation of g; must contain no odd directed cycle.
Choice choice_via_orientation(const Graph& g, const Digraph& orientation, const ListAssignment& lists, int k);

/// Brooks-type list multicolouring for a connected graph that is neither
/// complete nor an odd cycle.
///
/// With every list of size >= k*maxdeg on a non-regular graph, colours along
/// a degeneracy order. Otherwise lists of size >= k*deg(v) suffice: an
/// induced even cycle or theta subgraph is located by exhaustive search, the
/// rest of the graph is coloured farthest-first, and the subgraph is finished
/// last (even cycle by the kernel method, theta by the fixed vertex sequence).
Choice degree_choice(const Graph& g, const ListAssignment& lists, int k);

}  // namespace abch
