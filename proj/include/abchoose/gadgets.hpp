#pragma once

#include <string>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/lists.hpp"

namespace abch {

/// Where a gadget vertex came from: a copy of an input vertex, or a named apex.
struct VertexLabel {
    /// Copy index, 1-based. Copies indexed by a pair (i, j) also set copy_j.
    int copy = 0;
    int copy_j = 0;
    Vertex original = -1;
    /// "apex", "u" or "v" for added vertices, empty otherwise.
    std::string apex;

    std::string to_string() const;
};

struct GadgetOutput {
    Graph graph;
    std::vector<VertexLabel> labels;
    /// 0/1 side per vertex for the bipartite gadgets, empty otherwise.
    std::vector<int> side;
    /// Side of each input vertex; vertices on side 0 form X.
    std::vector<int> input_side;
    int copies = 0;
};

/// g plus an apex (the last vertex) adjacent to every vertex.
GadgetOutput cone(const Graph& g);

/// `copies` disjoint copies of g plus an apex joined to all of them.
/// Copy i (1-based) holds vertices [(i-1)n, in); the apex is last.
/// copies < 0 means n+1.
GadgetOutput amplifier(const Graph& g, int copies = -1);

/// Lists on the amplifier that are hard when `base` (lists of size k-1 on g) is:
/// copy i gets base(w) shifted past the copy numbers together with colour i,
/// and the apex gets {1..k}.
ListAssignment amplifier_hard_lists(const GadgetOutput& amp, const ListAssignment& base, int k);

/// Nine copies G_{i,j} (i, j in 1..3) of bipartite g, then u and v.
/// Copy (i, j) holds vertices [qn, (q+1)n) with q = 3(i-1) + (j-1); u = 9n, v = 9n+1.
/// u is joined to the X-side copies of vertices with f = 2, v to the Y-side ones.
/// Throws std::invalid_argument for non-bipartite g or f outside {2,3}.
GadgetOutput bg23_to_bg3(const Graph& g, const std::vector<int>& f);

/// Lists of size 3 on bg23_to_bg3 from lists base(w) of size f(w) on g:
/// base colours are shifted past 3, f = 2 vertices of copy (i, j) gain
/// i (X side) or j (Y side), and u, v get {1,2,3}.
ListAssignment bg23_hard_lists(const GadgetOutput& gadget, const std::vector<int>& f, const ListAssignment& base);

/// (k+1)^2 copies G_{i,j} of bipartite g, u joined to every X-side copy
/// vertex and v to every Y-side one. Numbering as in bg23_to_bg3.
GadgetOutput lift_k(const Graph& g, int k);

/// Lists of size k+1 on lift_k from k-lists on g, built like bg23_hard_lists.
ListAssignment lift_k_hard_lists(const GadgetOutput& gadget, int k, const ListAssignment& base);

}  // namespace abch
