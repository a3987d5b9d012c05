#include "abchoose/kernel.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "abchoose/structure.hpp"

namespace abch {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string cycle_text(const std::vector<Vertex>& cycle)
{
    std::string s;
    for (Vertex v : cycle) s += (s.empty() ? "" : "->") + std::to_string(v);
    if (!cycle.empty()) s += "->" + std::to_string(cycle.front());
    return s;
}

void require_no_odd_cycle(const Digraph& d)
{
    auto cycle = scc_and_directed_bipartition(d).odd_cycle();
    if (!cycle.empty()) throw OddDirectedCycleError(std::move(cycle));
}

// Kernel of d, which must have no odd directed cycle (not rechecked).
std::vector<Vertex> kernel_unchecked(const Digraph& d)
{
    const auto rep = scc_and_directed_bipartition(d);
    std::vector<char> in_kernel(idx(d.num_vertices()), 0);
    auto dominated = [&](Vertex v) {
        const auto& out = d.out_neighbors(v);
        return std::any_of(out.begin(), out.end(), [&](Vertex w) { return in_kernel[idx(w)] != 0; });
    };

    for (const auto& comp : rep.components) {
        std::vector<Vertex> open;
        for (Vertex v : comp.vertices)
            if (!dominated(v)) open.push_back(v);
        if (open.empty()) continue;
        if (open.size() == comp.vertices.size()) {
            if (comp.vertices.size() == 1) {
                in_kernel[idx(comp.vertices[0])] = 1;
            } else {
                for (std::size_t i = 0; i < comp.vertices.size(); ++i)
                    if (comp.side[i] == 0) in_kernel[idx(comp.vertices[i])] = 1;
            }
            continue;
        }
        const Digraph sub = d.induced(open);
        for (Vertex local : kernel_unchecked(sub)) in_kernel[idx(open[idx(local)])] = 1;
    }

    std::vector<Vertex> k;
    for (Vertex v = 0; v < d.num_vertices(); ++v)
        if (in_kernel[idx(v)]) k.push_back(v);
    return k;
}

void require_list_sizes(const Digraph& d, const ListAssignment& lists, int k)
{
    if (k < 1) throw std::invalid_argument("kernel choice: k must be at least 1");
    if (lists.size() != d.num_vertices())
        throw std::invalid_argument("kernel choice: list assignment covers " + std::to_string(lists.size()) +
                                    " vertices, digraph has " + std::to_string(d.num_vertices()));
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
        std::size_t need = static_cast<std::size_t>(k) * static_cast<std::size_t>(d.out_degree(v) + 1);
        if (lists[v].size() < need)
            throw std::invalid_argument("kernel choice: list of vertex " + std::to_string(v) + " has " +
                                        std::to_string(lists[v].size()) + " colours, needs at least " +
                                        std::to_string(need));
    }
}

void require_route_lists(const ListAssignment& lists, int n, int k, int bound, const char* route)
{
    if (k < 1) throw std::invalid_argument(std::string(route) + " route: k must be at least 1");
    if (lists.size() != n)
        throw std::invalid_argument(std::string(route) + " route: list assignment does not match the graph");
    std::size_t need = static_cast<std::size_t>(k) * static_cast<std::size_t>(bound + 1);
    for (Vertex v = 0; v < n; ++v)
        if (lists[v].size() < need)
            throw std::invalid_argument(std::string(route) + " route: vertex " + std::to_string(v) + " has " +
                                        std::to_string(lists[v].size()) + " colours, route needs " +
                                        std::to_string(need));
}

const char* route_name(OrientationRoute route)
{
    switch (route) {
    case OrientationRoute::Degeneracy: return "degeneracy";
    case OrientationRoute::Chordal: return "chordal";
    case OrientationRoute::BipartiteDensity: return "bipartite-density";
    }
    return "?";
}

}  // namespace

OddDirectedCycleError::OddDirectedCycleError(std::vector<Vertex> cycle)
    : std::invalid_argument("digraph has an odd directed cycle: " + cycle_text(cycle)), cycle_(std::move(cycle))
{
}

bool is_kernel(const Digraph& d, std::span<const Vertex> k)
{
    std::vector<char> in(idx(d.num_vertices()), 0);
    for (Vertex v : k) {
        if (v < 0 || v >= d.num_vertices()) return false;
        in[idx(v)] = 1;
    }
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
        bool hit = false;
        for (Vertex w : d.out_neighbors(v)) {
            if (in[idx(w)] && in[idx(v)]) return false;
            hit = hit || in[idx(w)];
        }
        if (!in[idx(v)] && !hit) return false;
    }
    return true;
}

std::vector<Vertex> find_kernel(const Digraph& d)
{
    require_no_odd_cycle(d);
    auto k = kernel_unchecked(d);
    if (!is_kernel(d, k)) throw std::logic_error("find_kernel: result fails the kernel definition");
    return k;
}

KernelChoiceResult kernel_list_choice(const Digraph& d, const ListAssignment& lists, int k)
{
    require_list_sizes(d, lists, k);
    require_no_odd_cycle(d);

    const int n = d.num_vertices();
    std::vector<Color> palette;
    for (const auto& s : lists.sets()) palette.insert(palette.end(), s.begin(), s.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

    KernelChoiceResult out;
    std::vector<std::vector<Color>> chosen(idx(n));
    std::vector<char> waiting(idx(n), 1);
    int remaining = n;

    // A colour absent from every waiting list stays absent, so a single
    // ascending sweep realises "smallest colour still present in a waiting list".
    for (Color c : palette) {
        if (remaining == 0) break;
        std::vector<Vertex> holders;
        for (Vertex v = 0; v < n; ++v)
            if (waiting[idx(v)] && std::binary_search(lists[v].begin(), lists[v].end(), c)) holders.push_back(v);
        if (holders.empty()) continue;
        ++out.iterations;
        const Digraph sub = d.induced(holders);
        for (Vertex local : kernel_unchecked(sub)) {
            Vertex v = holders[idx(local)];
            chosen[idx(v)].push_back(c);
            if (static_cast<int>(chosen[idx(v)].size()) == k) {
                waiting[idx(v)] = 0;
                --remaining;
            }
        }
    }
    if (remaining != 0) throw std::logic_error("kernel choice: colours exhausted before every vertex was served");
    if (out.iterations > static_cast<std::size_t>(k) * static_cast<std::size_t>(n))
        throw std::logic_error("kernel choice: iteration bound k*n exceeded");

    out.choice = Choice(std::move(chosen));
    if (auto bad = choice_violation(d.underlying(), lists, out.choice, k))
        throw std::logic_error("kernel choice: invalid result: " + *bad);
    return out;
}

RouteOrientation route_orientation(const Graph& g, OrientationRoute route)
{
    switch (route) {
    case OrientationRoute::Degeneracy: {
        auto deg = degeneracy(g);
        return {std::move(deg.orientation), deg.degeneracy};
    }
    case OrientationRoute::Chordal: {
        auto ch = chordality(g);
        if (!ch.chordal) {
            std::string hole;
            for (Vertex v : ch.chordless_cycle) hole += (hole.empty() ? "" : ",") + std::to_string(v);
            throw std::invalid_argument("chordal route: graph is not chordal (chordless cycle " + hole + ")");
        }
        std::vector<int> position(idx(g.num_vertices()));
        for (std::size_t i = 0; i < ch.elimination_order.size(); ++i)
            position[idx(ch.elimination_order[i])] = static_cast<int>(i);
        Digraph d(g.num_vertices());
        for (const Edge& e : g.edges()) {
            if (position[idx(e.u)] < position[idx(e.v)]) d.add_arc(e.u, e.v);
            else d.add_arc(e.v, e.u);
        }
        int omega = static_cast<int>(maximum_clique(g).size());
        return {std::move(d), std::max(omega - 1, 0)};
    }
    case OrientationRoute::BipartiteDensity: {
        if (!bipartition(g).bipartite)
            throw std::invalid_argument("bipartite-density route: graph is not bipartite");
        if (g.num_vertices() == 0) return {Digraph(0), 0};
        int bound = static_cast<int>(max_density(g).value.ceil());
        auto orient = orient_max_outdegree(g, bound);
        if (!orient.feasible()) throw std::logic_error("bipartite-density route: orientation infeasible at ceil(M)");
        return {std::move(*orient.orientation), bound};
    }
    }
    throw std::invalid_argument("unknown route");
}

Choice choice_via_orientation(const Graph& g, OrientationRoute route, const ListAssignment& lists, int k)
{
    auto ro = route_orientation(g, route);
    require_route_lists(lists, g.num_vertices(), k, ro.bound, route_name(route));
    return kernel_list_choice(ro.orientation, lists, k).choice;
}

Choice choice_via_orientation(const Graph& g, const Digraph& orientation, const ListAssignment& lists, int k)
{
    if (!orientation.is_orientation_of(g))
        throw std::invalid_argument("explicit route: digraph is not an orientation of the graph");
    require_route_lists(lists, g.num_vertices(), k, orientation.max_out_degree(), "explicit");
    return kernel_list_choice(orientation, lists, k).choice;
}

// ------------------------------------------------------------ degree choice

namespace {

struct InducedPiece {
    enum class Kind { EvenCycle, Theta } kind = Kind::EvenCycle;
    std::vector<Vertex> vertices;              // original ids
    std::vector<Vertex> cycle;                 // even cycle in cyclic order
    Vertex u = -1, v = -1;                     // theta branch vertices
    std::vector<std::vector<Vertex>> paths;    // theta interiors from u towards v, shortest first
};

// Recognises an even cycle or a theta graph on the induced subgraph `h`
// whose vertex i is `verts[i]`.
std::optional<InducedPiece> recognise(const Graph& h, const std::vector<Vertex>& verts)
{
    if (!h.is_connected()) return std::nullopt;
    std::vector<Vertex> branch;
    for (Vertex x = 0; x < h.num_vertices(); ++x) {
        if (h.degree(x) == 3) branch.push_back(x);
        else if (h.degree(x) != 2) return std::nullopt;
    }
    InducedPiece piece;
    piece.vertices = verts;
    if (branch.empty()) {
        if (h.num_vertices() % 2 != 0) return std::nullopt;
        piece.kind = InducedPiece::Kind::EvenCycle;
        Vertex prev = -1, cur = 0;
        do {
            piece.cycle.push_back(verts[idx(cur)]);
            Vertex nxt = h.neighbors(cur)[0] == prev ? h.neighbors(cur)[1] : h.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        } while (cur != 0);
        return piece;
    }
    if (branch.size() != 2) return std::nullopt;
    piece.kind = InducedPiece::Kind::Theta;
    piece.u = verts[idx(branch[0])];
    piece.v = verts[idx(branch[1])];
    for (Vertex start : h.neighbors(branch[0])) {
        std::vector<Vertex> interior;
        Vertex prev = branch[0], cur = start;
        while (h.degree(cur) == 2) {
            interior.push_back(verts[idx(cur)]);
            Vertex nxt = h.neighbors(cur)[0] == prev ? h.neighbors(cur)[1] : h.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        if (cur != branch[1]) return std::nullopt;
        piece.paths.push_back(std::move(interior));
    }
    std::stable_sort(piece.paths.begin(), piece.paths.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return piece;
}

// Exhaustive search over vertex subsets by increasing size.
std::optional<InducedPiece> find_induced_piece(const Graph& g)
{
    const int n = g.num_vertices();
    for (int size = 4; size <= n; ++size) {
        std::vector<int> comb(idx(size));
        for (int i = 0; i < size; ++i) comb[idx(i)] = i;
        for (;;) {
            auto piece = recognise(g.induced(comb), comb);
            if (piece) return piece;
            int i = size - 1;
            while (i >= 0 && comb[idx(i)] == n - size + i) --i;
            if (i < 0) break;
            ++comb[idx(i)];
            for (int j = i + 1; j < size; ++j) comb[idx(j)] = comb[idx(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

std::vector<Color> minus(const std::vector<Color>& a, const std::vector<Color>& b)
{
    std::vector<Color> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Color> lowest(const std::vector<Color>& s, int k)
{
    if (static_cast<int>(s.size()) < k) throw std::logic_error("degree choice: ran out of colours");
    return {s.begin(), s.begin() + k};
}

}  // namespace

Choice degree_choice(const Graph& g, const ListAssignment& lists, int k)
{
    const int n = g.num_vertices();
    if (k < 1) throw std::invalid_argument("degree choice: k must be at least 1");
    if (n == 0 || !g.is_connected()) throw std::invalid_argument("degree choice: graph must be connected and nonempty");
    if (lists.size() != n) throw std::invalid_argument("degree choice: list assignment does not match the graph");
    if (g.num_edges() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2)
        throw std::invalid_argument("degree choice: complete graphs are excluded");
    const int delta = g.max_degree();
    const bool regular = g.min_degree() == delta;
    if (regular && delta == 2 && n % 2 == 1)
        throw std::invalid_argument("degree choice: odd cycles are excluded");

    auto size_at_least = [&](auto need) {
        for (Vertex v = 0; v < n; ++v)
            if (lists[v].size() < static_cast<std::size_t>(need(v))) return v;
        return Vertex{-1};
    };

    if (!regular && size_at_least([&](Vertex) { return k * delta; }) == -1) {
        auto deg = degeneracy(g);
        if (deg.degeneracy > delta - 1) throw std::logic_error("degree choice: degeneracy not below max degree");
        return kernel_list_choice(deg.orientation, lists, k).choice;
    }

    if (Vertex bad = size_at_least([&](Vertex v) { return k * g.degree(v); }); bad != -1)
        throw std::invalid_argument("degree choice: vertex " + std::to_string(bad) + " has " +
                                    std::to_string(lists[bad].size()) + " colours, needs k*deg = " +
                                    std::to_string(k * g.degree(bad)));

    auto piece = find_induced_piece(g);
    if (!piece)
        throw std::invalid_argument("degree choice: no induced even cycle or theta subgraph (every block is a "
                                    "clique or an odd cycle)");

    // Distance from the piece; farthest vertices are coloured first.
    std::vector<int> dist(idx(n), -1);
    std::queue<Vertex> q;
    for (Vertex v : piece->vertices) {
        dist[idx(v)] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[idx(w)] < 0) {
                dist[idx(w)] = dist[idx(v)] + 1;
                q.push(w);
            }
    }
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (dist[idx(v)] > 0) outside.push_back(v);
    std::stable_sort(outside.begin(), outside.end(), [&](Vertex a, Vertex b) { return dist[idx(a)] > dist[idx(b)]; });

    std::vector<std::vector<Color>> chosen(idx(n));
    auto available = [&](Vertex v) {
        std::vector<Color> taken;
        for (Vertex w : g.neighbors(v)) taken.insert(taken.end(), chosen[idx(w)].begin(), chosen[idx(w)].end());
        std::sort(taken.begin(), taken.end());
        return minus(lists[v], taken);
    };
    for (Vertex v : outside) chosen[idx(v)] = lowest(available(v), k);

    // Inside the piece each list is cut to exactly k * (degree within the piece):
    // the theta order relies on S(u) - S(z1) having k colours, which longer
    // lists do not guarantee.
    std::vector<char> in_piece(idx(n), 0);
    for (Vertex w : piece->vertices) in_piece[idx(w)] = 1;
    std::vector<std::vector<Color>> base(idx(n));
    for (Vertex w : piece->vertices) {
        int dh = 0;
        for (Vertex x : g.neighbors(w)) dh += in_piece[idx(x)];
        base[idx(w)] = lowest(available(w), k * dh);
    }
    auto piece_available = [&](Vertex w) {
        std::vector<Color> taken;
        for (Vertex x : g.neighbors(w)) taken.insert(taken.end(), chosen[idx(x)].begin(), chosen[idx(x)].end());
        std::sort(taken.begin(), taken.end());
        return minus(base[idx(w)], taken);
    };

    if (piece->kind == InducedPiece::Kind::EvenCycle) {
        const auto& cyc = piece->cycle;
        Digraph d(static_cast<int>(cyc.size()));
        std::vector<std::vector<Color>> reduced;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            d.add_arc(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % cyc.size()));
            reduced.push_back(piece_available(cyc[i]));
        }
        auto local = kernel_list_choice(d, ListAssignment(std::move(reduced)), k).choice;
        for (std::size_t i = 0; i < cyc.size(); ++i) chosen[idx(cyc[i])] = local[static_cast<Vertex>(i)];
    } else {
        // Paths sorted by length: x (possibly the direct edge), y, then z with >= 1 interior vertex.
        const auto& x = piece->paths[0];
        const auto& y = piece->paths[1];
        const auto& z = piece->paths[2];
        const Vertex u = piece->u, v = piece->v;
        chosen[idx(u)] = lowest(minus(piece_available(u), piece_available(z.front())), k);
        std::vector<Vertex> order(x.begin(), x.end());
        order.insert(order.end(), y.begin(), y.end());
        order.push_back(v);
        order.insert(order.end(), z.rbegin(), z.rend());
        for (Vertex w : order) chosen[idx(w)] = lowest(piece_available(w), k);
    }

    Choice out(std::move(chosen));
    if (auto bad = choice_violation(g, lists, out, k)) throw std::logic_error("degree choice: invalid result: " + *bad);
    return out;
}

}  // namespace abch
