#pragma once

// Reference implementations used to check the library. Each one is the
// slowest obvious algorithm for its question and shares no code with src/.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/lists.hpp"

namespace ref {

using abch::Color;
using abch::Edge;
using abch::Graph;
using abch::Vertex;
using Rng = std::mt19937_64;

inline std::size_t at(int i) { return static_cast<std::size_t>(i); }

inline bool adjacent(const std::vector<Edge>& edges, Vertex u, Vertex v)
{
    for (const Edge& e : edges)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    return false;
}

// ----------------------------------------------------------- enumeration

/// Calls visit(subset) for every size-r subset of `items`, lexicographically.
inline bool for_each_subset(const std::vector<int>& items, int r, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == r) return visit(pick);
        for (std::size_t i = from; i < items.size(); ++i) {
            pick.push_back(items[i]);
            if (!rec(i + 1)) return false;
            pick.pop_back();
        }
        return true;
    };
    return rec(0);
}

// --------------------------------------------------------- list colouring

/// Vertices in index order, every b-subset tried, checked against earlier neighbours only.
inline bool has_list_multicoloring(const Graph& g, const std::vector<std::vector<Color>>& lists, int b)
{
    const int n = g.num_vertices();
    const auto edges = g.edges();
    std::vector<std::vector<int>> pick(at(n));
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        bool found = false;
        for_each_subset(lists[at(v)], b, [&](const std::vector<int>& s) {
            for (Vertex u = 0; u < v; ++u) {
                if (!adjacent(edges, u, v)) continue;
                for (int c : s)
                    if (std::find(pick[at(u)].begin(), pick[at(u)].end(), c) != pick[at(u)].end()) return true;
            }
            pick[at(v)] = s;
            found = rec(v + 1);
            return !found;
        });
        return found;
    };
    return rec(0);
}

/// (a:b)-choosability by trying every list assignment over the colours 1..a*n,
/// with vertex 0's list fixed to {1..a}. Only viable for tiny graphs.
inline bool is_ab_choosable(const Graph& g, int a, int b)
{
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<int> universe(at(a * n));
    std::iota(universe.begin(), universe.end(), 1);
    std::vector<std::vector<Color>> lists(at(n));
    lists[0].resize(at(a));
    std::iota(lists[0].begin(), lists[0].end(), 1);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return has_list_multicoloring(g, lists, b);
        return for_each_subset(universe, a, [&](const std::vector<int>& s) {
            lists[at(v)] = s;
            return rec(v + 1);
        });
    };
    return rec(1);
}

/// Relabels colours by first appearance, vertex by vertex and ascending within a list.
inline std::vector<std::vector<Color>> first_appearance_form(const std::vector<std::vector<Color>>& lists)
{
    std::map<Color, Color> label;
    std::vector<std::vector<Color>> out;
    for (const auto& l : lists) {
        std::vector<Color> s;
        for (Color c : l) {
            auto it = label.find(c);
            if (it == label.end()) it = label.emplace(c, static_cast<Color>(label.size()) + 1).first;
            s.push_back(it->second);
        }
        std::sort(s.begin(), s.end());
        out.push_back(s);
    }
    return out;
}

// --------------------------------------------------------------- colouring

inline bool is_k_colorable(const Graph& g, int k)
{
    const int n = g.num_vertices();
    const auto edges = g.edges();
    std::vector<int> c(at(n), -1);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        for (int x = 0; x < k; ++x) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                if (c[at(u)] == x && adjacent(edges, u, v)) ok = false;
            if (!ok) continue;
            c[at(v)] = x;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline int chromatic_number(const Graph& g)
{
    int k = 0;
    while (!is_k_colorable(g, k)) ++k;
    return k;
}

inline bool proper(const Graph& g, const std::vector<Color>& c)
{
    if (static_cast<int>(c.size()) != g.num_vertices()) return false;
    for (const Edge& e : g.edges())
        if (c[at(e.u)] == c[at(e.v)]) return false;
    return true;
}

inline Graph with_cliques(const Graph& g, const std::vector<std::vector<Vertex>>& blocks)
{
    std::set<std::pair<int, int>> es;
    for (const Edge& e : g.edges()) es.insert({e.u, e.v});
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) es.insert(std::minmax(b[i], b[j]));
    std::vector<Edge> list;
    for (auto [u, v] : es) list.push_back({u, v});
    return Graph(g.num_vertices(), list);
}

/// Strong k-colourability over every partition of the vertices into blocks of size <= k.
inline bool is_strongly_k_colorable(const Graph& g, int k)
{
    const int n = g.num_vertices();
    std::vector<std::vector<Vertex>> blocks;
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return is_k_colorable(with_cliques(g, blocks), k);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (static_cast<int>(blocks[i].size()) >= k) continue;
            blocks[i].push_back(v);
            bool ok = rec(v + 1);
            blocks[i].pop_back();
            if (!ok) return false;
        }
        blocks.push_back({v});
        bool ok = rec(v + 1);
        blocks.pop_back();
        return ok;
    };
    return rec(0);
}

// ------------------------------------------------------------------ kernels

inline std::optional<std::vector<Vertex>> brute_kernel(const abch::Digraph& d)
{
    const int n = d.num_vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto in = [&](Vertex v) { return (mask >> v) & 1u; };
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            bool dominated = false;
            for (Vertex w : d.out_neighbors(v)) {
                if (in(v) && in(w)) ok = false;
                if (in(w)) dominated = true;
            }
            if (!in(v) && !dominated) ok = false;
        }
        if (ok) {
            std::vector<Vertex> k;
            for (Vertex v = 0; v < n; ++v)
                if (in(v)) k.push_back(v);
            return k;
        }
    }
    return std::nullopt;
}

inline bool kernel_holds(const abch::Digraph& d, const std::vector<Vertex>& k)
{
    std::vector<char> in(at(d.num_vertices()), 0);
    for (Vertex v : k) in[at(v)] = 1;
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
        bool dominated = false;
        for (Vertex w : d.out_neighbors(v)) {
            if (in[at(v)] && in[at(w)]) return false;
            dominated = dominated || in[at(w)];
        }
        if (!in[at(v)] && !dominated) return false;
    }
    return true;
}

// ----------------------------------------------------------------- density

/// max |E(H)|/|V(H)| as a reduced (num, den) pair over all nonempty vertex subsets.
inline std::pair<std::int64_t, std::int64_t> max_density(const Graph& g)
{
    const int n = g.num_vertices();
    const auto edges = g.edges();
    std::int64_t bn = 0, bd = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::int64_t e = 0;
        for (const Edge& x : edges) e += ((mask >> x.u) & 1u) && ((mask >> x.v) & 1u);
        std::int64_t v = std::popcount(mask);
        if (e * bd > bn * v) bn = e, bd = v;
    }
    std::int64_t gcd = std::gcd(bn, bd);
    return {bn / gcd, bd / gcd};
}

inline int degeneracy(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<char> alive(at(n), 1);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, low = n + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[at(v)]) continue;
            int d = 0;
            for (Vertex w : g.neighbors(v)) d += alive[at(w)];
            if (d < low) low = d, pick = v;
        }
        best = std::max(best, low);
        alive[at(pick)] = 0;
    }
    return best;
}

// -------------------------------------------------------------- isomorphism

/// Smallest adjacency bitmask over all vertex permutations (n <= 6).
inline std::uint32_t canonical_mask(int n, const std::vector<Edge>& edges)
{
    std::vector<int> perm(at(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
        std::uint32_t m = 0;
        for (const Edge& e : edges) {
            int a = std::min(perm[at(e.u)], perm[at(e.v)]), b = std::max(perm[at(e.u)], perm[at(e.v)]);
            int bit = b * (b - 1) / 2 + a;
            m |= 1u << bit;
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// One representative per isomorphism class of connected graphs on n vertices.
inline std::vector<Graph> connected_graphs(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < b; ++a) slots.push_back({a, b});
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u) edges.push_back({slots[i].first, slots[i].second});
        Graph g(n, edges);
        if (!g.is_connected()) continue;
        if (seen.insert(canonical_mask(n, edges)).second) out.push_back(g);
    }
    return out;
}

// --------------------------------------------------------------- generators

inline Graph random_graph(Rng& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph random_connected_graph(Rng& rng, int n, double p)
{
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (n <= 1 || g.is_connected()) return g;
    }
}

inline Graph random_bipartite(Rng& rng, int left, int right, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            if (coin(rng)) edges.push_back({u, left + v});
    return Graph(left + right, edges);
}

/// Chordal graph grown by attaching each new vertex to a clique of the current graph.
inline Graph random_chordal(Rng& rng, int n)
{
    std::vector<std::vector<Vertex>> cliques{{0}};
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        std::vector<Vertex> base = cliques[pick(rng)];
        std::shuffle(base.begin(), base.end(), rng);
        std::uniform_int_distribution<std::size_t> keep(1, base.size());
        base.resize(keep(rng));
        for (Vertex u : base) edges.push_back({u, v});
        base.push_back(v);
        cliques.push_back(base);
    }
    return Graph(n, edges);
}

/// Random lists of the given sizes drawn from 1..palette.
inline abch::ListAssignment random_lists(Rng& rng, const std::vector<int>& sizes, int palette)
{
    std::vector<int> all(at(palette));
    std::iota(all.begin(), all.end(), 1);
    std::vector<std::vector<Color>> lists;
    for (int s : sizes) {
        std::shuffle(all.begin(), all.end(), rng);
        lists.emplace_back(all.begin(), all.begin() + s);
    }
    return abch::ListAssignment(lists);
}

/// Independent restatement of the choice invariants.
inline bool choice_ok(const Graph& g, const abch::ListAssignment& lists, const abch::Choice& c, int b)
{
    if (c.size() != g.num_vertices() || lists.size() != g.num_vertices()) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<int>(c[v].size()) != b) return false;
        for (Color x : c[v])
            if (std::find(lists[v].begin(), lists[v].end(), x) == lists[v].end()) return false;
    }
    for (const Edge& e : g.edges())
        for (Color x : c[e.u])
            if (std::find(c[e.v].begin(), c[e.v].end(), x) != c[e.v].end()) return false;
    return true;
}

}  // namespace ref
