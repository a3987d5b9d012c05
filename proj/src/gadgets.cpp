#include "abchoose/gadgets.hpp"

#include <stdexcept>

#include "abchoose/structure.hpp"

namespace abch {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void add_copy(const Graph& g, int offset, std::vector<Edge>& edges)
{
    for (const Edge& e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
}

std::vector<int> require_bipartite(const Graph& g, const char* who)
{
    auto bp = bipartition(g);
    if (!bp.bipartite) throw std::invalid_argument(std::string(who) + ": input graph is not bipartite");
    return bp.side;
}

// Shared shape of bg23_to_bg3 and lift_k: `side` x `side` copies plus u and v.
GadgetOutput grid_of_copies(const Graph& g, int per_side, const std::vector<char>& joined, const char* who)
{
    const int n = g.num_vertices();
    GadgetOutput out;
    out.input_side = require_bipartite(g, who);
    out.copies = per_side * per_side;
    const Vertex u = out.copies * n, v = u + 1;
    std::vector<Edge> edges;
    for (int i = 1; i <= per_side; ++i)
        for (int j = 1; j <= per_side; ++j) {
            const int offset = ((i - 1) * per_side + (j - 1)) * n;
            add_copy(g, offset, edges);
            for (Vertex w = 0; w < n; ++w) {
                out.labels.push_back({i, j, w, {}});
                if (!joined[at(w)]) continue;
                edges.push_back({out.input_side[at(w)] == 0 ? u : v, offset + w});
            }
        }
    out.labels.push_back({0, 0, -1, "u"});
    out.labels.push_back({0, 0, -1, "v"});
    out.graph = Graph(v + 1, edges);
    auto bp = bipartition(out.graph);
    if (!bp.bipartite) throw std::logic_error(std::string(who) + ": gadget lost bipartiteness");
    out.side = std::move(bp.side);
    return out;
}

// Copy-(i, j) lists: base shifted by `shift`, plus i on X or j on Y where `extend` holds.
ListAssignment grid_lists(const GadgetOutput& gadget, const ListAssignment& base, int per_side, int shift,
                          const std::vector<char>& extend)
{
    const int n = base.size();
    if (gadget.graph.num_vertices() != per_side * per_side * n + 2)
        throw std::invalid_argument("hard lists: gadget does not match the base assignment");
    std::vector<std::vector<Color>> lists;
    for (const VertexLabel& lab : gadget.labels) {
        if (!lab.apex.empty()) {
            std::vector<Color> top;
            for (int c = 1; c <= per_side; ++c) top.push_back(c);
            lists.push_back(std::move(top));
            continue;
        }
        std::vector<Color> s;
        for (Color c : base[lab.original]) s.push_back(c + shift);
        if (extend[at(lab.original)]) s.push_back(gadget.input_side[at(lab.original)] == 0 ? lab.copy : lab.copy_j);
        lists.push_back(std::move(s));
    }
    return ListAssignment(std::move(lists));
}

}  // namespace

std::string VertexLabel::to_string() const
{
    if (!apex.empty()) return apex;
    std::string s = std::to_string(copy);
    if (copy_j) s += "," + std::to_string(copy_j);
    return s + ":" + std::to_string(original);
}

GadgetOutput cone(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<Edge> edges = g.edges();
    for (Vertex w = 0; w < n; ++w) edges.push_back({w, n});
    GadgetOutput out;
    out.copies = 1;
    out.graph = Graph(n + 1, edges);
    for (Vertex w = 0; w < n; ++w) out.labels.push_back({1, 0, w, {}});
    out.labels.push_back({0, 0, -1, "apex"});
    return out;
}

GadgetOutput amplifier(const Graph& g, int copies)
{
    const int n = g.num_vertices();
    if (copies < 0) copies = n + 1;
    if (copies == 0) throw std::invalid_argument("amplifier: at least one copy is needed");
    const Vertex apex = copies * n;
    std::vector<Edge> edges;
    GadgetOutput out;
    out.copies = copies;
    for (int i = 1; i <= copies; ++i) {
        add_copy(g, (i - 1) * n, edges);
        for (Vertex w = 0; w < n; ++w) {
            edges.push_back({(i - 1) * n + w, apex});
            out.labels.push_back({i, 0, w, {}});
        }
    }
    out.labels.push_back({0, 0, -1, "apex"});
    out.graph = Graph(apex + 1, edges);
    return out;
}

ListAssignment amplifier_hard_lists(const GadgetOutput& amp, const ListAssignment& base, int k)
{
    const int n = base.size();
    if (amp.graph.num_vertices() != amp.copies * n + 1)
        throw std::invalid_argument("amplifier_hard_lists: gadget does not match the base assignment");
    if (k < 1 || k > amp.copies) throw std::invalid_argument("amplifier_hard_lists: need 1 <= k <= copies");
    for (Vertex w = 0; w < n; ++w)
        if (static_cast<int>(base[w].size()) != k - 1)
            throw std::invalid_argument("amplifier_hard_lists: base list of vertex " + std::to_string(w) +
                                        " must have k-1 colours");
    std::vector<std::vector<Color>> lists;
    for (const VertexLabel& lab : amp.labels) {
        std::vector<Color> s;
        if (!lab.apex.empty()) {
            for (int c = 1; c <= k; ++c) s.push_back(c);
        } else {
            for (Color c : base[lab.original]) s.push_back(c + amp.copies + 1);
            s.push_back(lab.copy);
        }
        lists.push_back(std::move(s));
    }
    return ListAssignment(std::move(lists));
}

GadgetOutput bg23_to_bg3(const Graph& g, const std::vector<int>& f)
{
    const int n = g.num_vertices();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("bg23_to_bg3: f must give one value per vertex");
    std::vector<char> joined(at(n));
    for (Vertex w = 0; w < n; ++w) {
        if (f[at(w)] != 2 && f[at(w)] != 3)
            throw std::invalid_argument("bg23_to_bg3: f(" + std::to_string(w) + ") = " + std::to_string(f[at(w)]) +
                                        " is not 2 or 3");
        joined[at(w)] = f[at(w)] == 2;
    }
    return grid_of_copies(g, 3, joined, "bg23_to_bg3");
}

ListAssignment bg23_hard_lists(const GadgetOutput& gadget, const std::vector<int>& f, const ListAssignment& base)
{
    const int n = base.size();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("bg23_hard_lists: f must give one value per vertex");
    std::vector<char> extend(at(n));
    for (Vertex w = 0; w < n; ++w) {
        if (static_cast<int>(base[w].size()) != f[at(w)])
            throw std::invalid_argument("bg23_hard_lists: base list of vertex " + std::to_string(w) + " must have f(w) colours");
        extend[at(w)] = f[at(w)] == 2;
    }
    return grid_lists(gadget, base, 3, 4, extend);
}

GadgetOutput lift_k(const Graph& g, int k)
{
    if (k < 1) throw std::invalid_argument("lift_k: k must be at least 1");
    return grid_of_copies(g, k + 1, std::vector<char>(at(g.num_vertices()), 1), "lift_k");
}

ListAssignment lift_k_hard_lists(const GadgetOutput& gadget, int k, const ListAssignment& base)
{
    for (Vertex w = 0; w < base.size(); ++w)
        if (static_cast<int>(base[w].size()) != k)
            throw std::invalid_argument("lift_k_hard_lists: base list of vertex " + std::to_string(w) + " must have k colours");
    return grid_lists(gadget, base, k + 1, k + 2, std::vector<char>(at(base.size()), 1));
}

}  // namespace abch
