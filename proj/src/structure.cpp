#include "abchoose/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "maxflow.hpp"

namespace abch {

const char* to_string(CoreShape s)
{
    switch (s) {
    case CoreShape::SingleVertex: return "single-vertex";
    case CoreShape::EvenCycle: return "even-cycle";
    case CoreShape::ThetaTwoTwoEven: return "theta-2-2-even";
    case CoreShape::OddCycle: return "odd-cycle";
    case CoreShape::OtherTheta: return "other-theta";
    case CoreShape::Other: return "other";
    }
    return "?";
}

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string describe_cycle(const char* kind, std::size_t len)
{
    return std::string(kind) + " C" + std::to_string(len);
}

}  // namespace

// ------------------------------------------------------------------ core

CoreResult core_of(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(idx(n));
    std::vector<char> alive(idx(n), 1);
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        deg[idx(v)] = g.degree(v);
        if (deg[idx(v)] == 1) leaves.insert(v);
    }
    while (!leaves.empty()) {
        Vertex v = *leaves.begin();
        leaves.erase(leaves.begin());
        alive[idx(v)] = 0;
        for (Vertex w : g.neighbors(v)) {
            if (!alive[idx(w)]) continue;
            int d = --deg[idx(w)];
            if (d == 1) leaves.insert(w);
            else if (d == 0) leaves.erase(w);
        }
    }
    CoreResult out;
    for (Vertex v = 0; v < n; ++v)
        if (alive[idx(v)]) out.vertices.push_back(v);
    out.core = g.induced(out.vertices);
    return out;
}

TwoChoosabilityReport classify_two_choosable(const Graph& g)
{
    if (g.num_vertices() == 0) throw std::invalid_argument("classify2: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("classify2: graph is disconnected; classify each component");

    TwoChoosabilityReport rep;
    rep.core = core_of(g);
    const Graph& c = rep.core.core;
    const int n = c.num_vertices();

    if (n == 1) {
        rep.choosable = true;
        rep.shape = CoreShape::SingleVertex;
        rep.certificate = "core is K1";
        return rep;
    }

    std::vector<Vertex> branch;
    bool degrees_ok = true;
    for (Vertex v = 0; v < n; ++v) {
        if (c.degree(v) == 3) branch.push_back(v);
        else if (c.degree(v) != 2) degrees_ok = false;
    }

    if (degrees_ok && branch.empty()) {
        // Connected and 2-regular: a cycle.
        if (n % 2 == 0) {
            rep.choosable = true;
            rep.shape = CoreShape::EvenCycle;
            rep.certificate = describe_cycle("core is even cycle", idx(n)) + " (m=" + std::to_string((n - 2) / 2) + ")";
        } else {
            rep.shape = CoreShape::OddCycle;
            rep.certificate = describe_cycle("core is odd cycle", idx(n));
        }
        return rep;
    }

    if (degrees_ok && branch.size() == 2) {
        // Walk the three branches out of the first branch vertex.
        const Vertex p = branch[0], q = branch[1];
        std::vector<int> lengths;
        bool theta = true;
        for (Vertex start : c.neighbors(p)) {
            Vertex prev = p, cur = start;
            int len = 1;
            while (c.degree(cur) == 2) {
                Vertex nxt = c.neighbors(cur)[0] == prev ? c.neighbors(cur)[1] : c.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (cur != q) theta = false;
            lengths.push_back(len);
        }
        if (theta) {
            std::sort(lengths.begin(), lengths.end());
            std::string name = "Theta(" + std::to_string(lengths[0]) + "," + std::to_string(lengths[1]) + "," +
                               std::to_string(lengths[2]) + ")";
            if (lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0) {
                rep.choosable = true;
                rep.shape = CoreShape::ThetaTwoTwoEven;
                rep.certificate = "core is " + name + " (m=" + std::to_string(lengths[2] / 2) + ")";
            } else {
                rep.shape = CoreShape::OtherTheta;
                rep.certificate = "core is " + name + ", not of the form Theta(2,2,2m)";
            }
            return rep;
        }
    }

    rep.shape = CoreShape::Other;
    rep.certificate = "core has " + std::to_string(n) + " vertices and " + std::to_string(c.num_edges()) +
                      " edges; not K1, an even cycle or Theta(2,2,2m)";
    return rep;
}

// ------------------------------------------------------------ degeneracy

DegeneracyResult degeneracy(const Graph& g)
{
    const int n = g.num_vertices();
    DegeneracyResult out;
    out.orientation = Digraph(n);
    std::vector<int> deg(idx(n));
    std::vector<char> removed(idx(n), 0);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[idx(v)] = g.degree(v);
        queue.insert({deg[idx(v)], v});
    }
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[idx(v)] = 1;
        out.order.push_back(v);
        out.degeneracy = std::max(out.degeneracy, d);
        for (Vertex w : g.neighbors(v)) {
            if (removed[idx(w)]) continue;
            out.orientation.add_arc(v, w);
            queue.erase({deg[idx(w)], w});
            queue.insert({--deg[idx(w)], w});
        }
    }
    return out;
}

// --------------------------------------------------------------- density

DensityReport max_density_brute_force(const Graph& g)
{
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("max_density: empty graph");
    if (n > kBruteForceDensityLimit + 4) throw std::invalid_argument("max_density_brute_force: graph too large");

    std::vector<std::uint32_t> adj(idx(n), 0);
    for (const Edge& e : g.edges()) {
        adj[idx(e.u)] |= 1u << e.v;
        adj[idx(e.v)] |= 1u << e.u;
    }
    Rational best(-1, 1);
    std::uint32_t best_mask = 0;
    const std::uint32_t end = 1u << n;
    for (std::uint32_t mask = 1; mask < end; ++mask) {
        std::int64_t twice = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            twice += std::popcount(adj[idx(std::countr_zero(rest))] & mask);
        Rational r(twice / 2, std::popcount(mask));
        if (r > best) {
            best = r;
            best_mask = mask;
        }
    }
    DensityReport rep{best, {}};
    for (Vertex v = 0; v < n; ++v)
        if (best_mask >> v & 1u) rep.witness.push_back(v);
    return rep;
}

namespace {

// Maximises q|E(S)| - p|S| by a minimum cut; returns S.
std::vector<Vertex> max_closure(const Graph& g, const std::vector<Edge>& edges, std::int64_t p, std::int64_t q)
{
    const int m = static_cast<int>(edges.size());
    const int n = g.num_vertices();
    const int source = 0, sink = 1, first_edge = 2, first_vertex = 2 + m;
    detail::MaxFlow flow(2 + m + n);
    for (int i = 0; i < m; ++i) {
        flow.add_arc(source, first_edge + i, q);
        flow.add_arc(first_edge + i, first_vertex + edges[idx(i)].u, detail::MaxFlow::kInfinity);
        flow.add_arc(first_edge + i, first_vertex + edges[idx(i)].v, detail::MaxFlow::kInfinity);
    }
    for (Vertex v = 0; v < n; ++v) flow.add_arc(first_vertex + v, sink, p);
    flow.run(source, sink);
    auto side = flow.source_side(source);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
        if (side[idx(first_vertex + v)]) s.push_back(v);
    return s;
}

}  // namespace

DensityReport max_density_flow(const Graph& g)
{
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("max_density: empty graph");
    const auto edges = g.edges();

    DensityReport rep;
    rep.witness.resize(idx(n));
    for (Vertex v = 0; v < n; ++v) rep.witness[idx(v)] = v;
    rep.value = Rational(static_cast<std::int64_t>(edges.size()), n);

    for (;;) {
        auto s = max_closure(g, edges, rep.value.num, rep.value.den);
        if (s.empty()) break;
        Rational r(static_cast<std::int64_t>(induced_edge_count(g, s)), static_cast<std::int64_t>(s.size()));
        if (r <= rep.value) break;
        rep.value = r;
        rep.witness = std::move(s);
    }
    return rep;
}

DensityReport max_density(const Graph& g)
{
    if (g.num_vertices() <= kBruteForceDensityLimit) return max_density_brute_force(g);
    return max_density_flow(g);
}

OrientationResult orient_max_outdegree(const Graph& g, int d)
{
    if (d < 0) throw std::invalid_argument("orient: d must be non-negative");
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.num_vertices();
    const int source = 0, sink = 1, first_edge = 2, first_vertex = 2 + m;

    detail::MaxFlow flow(2 + m + n);
    std::vector<int> to_u(idx(m)), to_v(idx(m));
    for (int i = 0; i < m; ++i) {
        flow.add_arc(source, first_edge + i, 1);
        to_u[idx(i)] = flow.add_arc(first_edge + i, first_vertex + edges[idx(i)].u, 1);
        to_v[idx(i)] = flow.add_arc(first_edge + i, first_vertex + edges[idx(i)].v, 1);
    }
    for (Vertex v = 0; v < n; ++v) flow.add_arc(first_vertex + v, sink, d);

    OrientationResult out;
    if (flow.run(source, sink) == m) {
        // The endpoint that absorbs an edge's unit becomes its tail.
        Digraph dg(n);
        for (int i = 0; i < m; ++i) {
            const Edge& e = edges[idx(i)];
            if (flow.flow_on(to_u[idx(i)]) == 1) dg.add_arc(e.u, e.v);
            else dg.add_arc(e.v, e.u);
        }
        out.orientation = std::move(dg);
    } else {
        out.dense_witness = max_density(g);
        if (out.dense_witness->value <= Rational(d, 1))
            throw std::logic_error("orient: flow infeasible but density does not exceed d");
    }
    return out;
}

// ------------------------------------------------------ structure queries

Bipartition bipartition(const Graph& g)
{
    const int n = g.num_vertices();
    Bipartition out;
    out.bipartite = true;
    out.side.assign(idx(n), -1);
    std::vector<Vertex> parent(idx(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (out.side[idx(s)] != -1) continue;
        out.side[idx(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (out.side[idx(w)] == -1) {
                    out.side[idx(w)] = 1 - out.side[idx(u)];
                    parent[idx(w)] = u;
                    q.push(w);
                } else if (out.side[idx(w)] == out.side[idx(u)] && out.bipartite) {
                    // Odd cycle: tree paths from u and w up to their common ancestor.
                    out.bipartite = false;
                    std::vector<Vertex> pu{u}, pw{w};
                    std::vector<char> on_pu(idx(n), 0);
                    on_pu[idx(u)] = 1;
                    for (Vertex x = u; parent[idx(x)] != -1;) {
                        x = parent[idx(x)];
                        pu.push_back(x);
                        on_pu[idx(x)] = 1;
                    }
                    while (!on_pu[idx(pw.back())]) pw.push_back(parent[idx(pw.back())]);
                    Vertex lca = pw.back();
                    pw.pop_back();
                    std::vector<Vertex> cycle;
                    for (Vertex x : pu) {
                        cycle.push_back(x);
                        if (x == lca) break;
                    }
                    for (auto it = pw.rbegin(); it != pw.rend(); ++it) cycle.push_back(*it);
                    out.odd_cycle = std::move(cycle);
                }
            }
        }
    }
    if (!out.bipartite) out.side.clear();
    return out;
}

bool is_simplicial(const Graph& g, Vertex v)
{
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

namespace {

std::vector<Vertex> find_chordless_cycle(const Graph& g)
{
    const int n = g.num_vertices();
    for (Vertex x = 0; x < n; ++x) {
        const auto& nb = g.neighbors(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex a = nb[i], b = nb[j];
                if (g.has_edge(a, b)) continue;
                // Shortest a-b path avoiding x and its other neighbours.
                std::vector<char> blocked(idx(n), 0);
                blocked[idx(x)] = 1;
                for (Vertex w : nb)
                    if (w != a && w != b) blocked[idx(w)] = 1;
                std::vector<Vertex> parent(idx(n), -1);
                std::vector<char> seen(idx(n), 0);
                std::queue<Vertex> q;
                q.push(a);
                seen[idx(a)] = 1;
                while (!q.empty() && !seen[idx(b)]) {
                    Vertex u = q.front();
                    q.pop();
                    for (Vertex w : g.neighbors(u)) {
                        if (blocked[idx(w)] || seen[idx(w)]) continue;
                        if (u == a && w == b) continue;
                        seen[idx(w)] = 1;
                        parent[idx(w)] = u;
                        q.push(w);
                    }
                }
                if (!seen[idx(b)]) continue;
                std::vector<Vertex> path;
                for (Vertex w = b; w != -1; w = parent[idx(w)]) path.push_back(w);
                std::reverse(path.begin(), path.end());
                std::vector<Vertex> cycle{x};
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
    }
    return {};
}

}  // namespace

Chordality chordality(const Graph& g)
{
    const int n = g.num_vertices();
    Chordality out;
    std::vector<Vertex> remaining(idx(n));
    for (Vertex v = 0; v < n; ++v) remaining[idx(v)] = v;
    while (!remaining.empty()) {
        Graph h = g.induced(remaining);
        std::size_t pick = remaining.size();
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (is_simplicial(h, static_cast<Vertex>(i))) {
                pick = i;
                break;
            }
        if (pick == remaining.size()) break;
        out.elimination_order.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    out.chordal = remaining.empty();
    if (!out.chordal) {
        out.elimination_order.clear();
        out.chordless_cycle = find_chordless_cycle(g);
        if (out.chordless_cycle.size() < 4) throw std::logic_error("chordality: no simplicial vertex but no hole found");
    }
    return out;
}

namespace {

void extend_clique(const Graph& g, std::vector<Vertex>& current, std::vector<Vertex> candidates,
                   std::vector<Vertex>& best)
{
    if (current.size() + candidates.size() <= best.size()) return;
    if (candidates.empty()) {
        best = current;
        return;
    }
    while (!candidates.empty()) {
        if (current.size() + candidates.size() <= best.size()) return;
        Vertex v = candidates.front();
        candidates.erase(candidates.begin());
        std::vector<Vertex> next;
        for (Vertex w : candidates)
            if (g.has_edge(v, w)) next.push_back(w);
        current.push_back(v);
        extend_clique(g, current, std::move(next), best);
        current.pop_back();
    }
}

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g)
{
    std::vector<Vertex> all(idx(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[idx(v)] = v;
    // Higher-degree vertices first tends to find large cliques early.
    std::stable_sort(all.begin(), all.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> current, best;
    extend_clique(g, current, all, best);
    std::sort(best.begin(), best.end());
    return best;
}

Graph line_graph(const Graph& g)
{
    const auto edges = g.edges();
    std::vector<std::vector<int>> incident(idx(g.num_vertices()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[idx(edges[i].u)].push_back(static_cast<int>(i));
        incident[idx(edges[i].v)].push_back(static_cast<int>(i));
    }
    Graph l(static_cast<int>(edges.size()));
    for (const auto& inc : incident)
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) l.add_edge(inc[i], inc[j]);
    return l;
}

StructureReport structure_queries(const Graph& g)
{
    StructureReport rep;
    rep.bipartition = bipartition(g);
    rep.chordality = chordality(g);
    rep.max_clique = maximum_clique(g);
    rep.clique_number = static_cast<int>(rep.max_clique.size());
    rep.line_graph = line_graph(g);
    return rep;
}

// ---------------------------------------------------------- digraph SCCs

namespace {

std::vector<std::vector<Vertex>> tarjan(const Digraph& d)
{
    const int n = d.num_vertices();
    std::vector<int> index(idx(n), -1), low(idx(n), 0);
    std::vector<char> on_stack(idx(n), 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> comps;
    int counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (index[idx(root)] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[idx(root)] = low[idx(root)] = counter++;
        stack.push_back(root);
        on_stack[idx(root)] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& out = d.out_neighbors(f.v);
            if (f.next < out.size()) {
                Vertex w = out[f.next++];
                if (index[idx(w)] == -1) {
                    index[idx(w)] = low[idx(w)] = counter++;
                    stack.push_back(w);
                    on_stack[idx(w)] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[idx(w)]) {
                    low[idx(f.v)] = std::min(low[idx(f.v)], index[idx(w)]);
                }
                continue;
            }
            Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[idx(call.back().v)] = std::min(low[idx(call.back().v)], low[idx(v)]);
            if (low[idx(v)] == index[idx(v)]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[idx(w)] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

// BFS inside one component; parent links follow arcs (forward) or reversed arcs.
std::vector<Vertex> bfs_tree(const Digraph& d, Vertex root, const std::vector<int>& comp_of, int comp, bool forward,
                             std::vector<int>& dist)
{
    std::vector<Vertex> parent(idx(d.num_vertices()), -1);
    dist.assign(idx(d.num_vertices()), -1);
    std::queue<Vertex> q;
    dist[idx(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        const auto& next = forward ? d.out_neighbors(u) : d.in_neighbors(u);
        for (Vertex w : next) {
            if (comp_of[idx(w)] != comp || dist[idx(w)] != -1) continue;
            dist[idx(w)] = dist[idx(u)] + 1;
            parent[idx(w)] = u;
            q.push(w);
        }
    }
    return parent;
}

// Splits a closed walk (last vertex == first) into simple cycles and returns an odd one.
std::vector<Vertex> odd_cycle_in_walk(const std::vector<Vertex>& walk)
{
    std::vector<Vertex> stack;
    std::unordered_map<Vertex, std::size_t> pos;
    for (Vertex v : walk) {
        auto it = pos.find(v);
        if (it == pos.end()) {
            pos[v] = stack.size();
            stack.push_back(v);
            continue;
        }
        std::size_t p = it->second;
        std::vector<Vertex> cycle(stack.begin() + static_cast<std::ptrdiff_t>(p), stack.end());
        if (cycle.size() % 2 == 1) return cycle;
        for (std::size_t i = p + 1; i < stack.size(); ++i) pos.erase(stack[i]);
        stack.resize(p + 1);
    }
    return {};
}

}  // namespace

SccReport scc_and_directed_bipartition(const Digraph& d)
{
    SccReport rep;
    const int n = d.num_vertices();
    rep.component_of.assign(idx(n), -1);
    auto comps = tarjan(d);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) rep.component_of[idx(v)] = static_cast<int>(c);

    for (std::size_t c = 0; c < comps.size(); ++c) {
        StrongComponent sc;
        sc.vertices = comps[c];
        const Vertex root = sc.vertices.front();
        const int ci = static_cast<int>(c);
        std::vector<int> dist;
        auto parent = bfs_tree(d, root, rep.component_of, ci, true, dist);
        for (Vertex v : sc.vertices) sc.side.push_back(dist[idx(v)] % 2);

        for (Vertex u : sc.vertices) {
            for (Vertex w : d.out_neighbors(u)) {
                if (rep.component_of[idx(w)] != ci || dist[idx(u)] % 2 != dist[idx(w)] % 2) continue;
                // Parity clash on u->w: root~>u, u->w, w~>root, or root~>w~>root, is odd.
                sc.bipartite = false;
                std::vector<int> back_dist;
                auto back_parent = bfs_tree(d, root, rep.component_of, ci, false, back_dist);
                auto path_from_root = [&](Vertex x) {
                    std::vector<Vertex> p;
                    for (Vertex y = x; y != -1; y = parent[idx(y)]) p.push_back(y);
                    std::reverse(p.begin(), p.end());
                    return p;
                };
                auto path_to_root = [&](Vertex x) {
                    std::vector<Vertex> p;
                    for (Vertex y = x; y != -1; y = back_parent[idx(y)]) p.push_back(y);
                    return p;
                };
                std::vector<Vertex> walk = path_from_root(u);
                auto tail = path_to_root(w);
                walk.insert(walk.end(), tail.begin(), tail.end());
                if ((walk.size() - 1) % 2 == 0) {
                    walk = path_from_root(w);
                    tail = path_to_root(w);
                    walk.insert(walk.end(), tail.begin() + 1, tail.end());
                }
                sc.odd_cycle = odd_cycle_in_walk(walk);
                if (sc.odd_cycle.empty()) throw std::logic_error("scc: odd walk without odd cycle");
                break;
            }
            if (!sc.bipartite) break;
        }
        if (!sc.bipartite) sc.side.clear();
        rep.components.push_back(std::move(sc));
    }
    return rep;
}

std::vector<Vertex> SccReport::odd_cycle() const
{
    for (const auto& c : components)
        if (!c.bipartite) return c.odd_cycle;
    return {};
}

}  // namespace abch
