#include "abchoose/coloring.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace abch {

namespace {

class Dsatur {
public:
    Dsatur(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.num_vertices()), -1),
        seen_(static_cast<std::size_t>(g.num_vertices()), 0) {}

    bool run() { return extend(0, 0); }
    std::vector<Color> coloring() const { return color_; }

private:
    // seen_[v] holds the set of colours on coloured neighbours of v.
    bool extend(int placed, int used)
    {
        const int n = g_.num_vertices();
        if (placed == n) return true;

        Vertex best = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (color_[at(v)] >= 0) continue;
            int sat = std::popcount(seen_[at(v)]);
            if (sat >= k_) return false;
            int deg = 0;
            for (Vertex w : g_.neighbors(v)) deg += color_[at(w)] < 0;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }

        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (seen_[at(best)] >> c & 1u) continue;
            color_[at(best)] = c;
            std::vector<std::pair<Vertex, std::uint64_t>> undo;
            for (Vertex w : g_.neighbors(best)) {
                if (color_[at(w)] >= 0) continue;
                undo.emplace_back(w, seen_[at(w)]);
                seen_[at(w)] |= std::uint64_t{1} << c;
            }
            if (extend(placed + 1, std::max(used, c + 1))) return true;
            for (auto [w, old] : undo) seen_[at(w)] = old;
            color_[at(best)] = -1;
        }
        return false;
    }

    static std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

    const Graph& g_;
    int k_;
    std::vector<Color> color_;
    std::vector<std::uint64_t> seen_;
};

}  // namespace

std::optional<std::vector<Color>> k_coloring(const Graph& g, int k)
{
    const int n = g.num_vertices();
    if (k < 0) throw std::invalid_argument("k_coloring: k must be non-negative");
    if (n == 0) return std::vector<Color>{};
    if (k == 0) return std::nullopt;
    if (k >= n) {
        std::vector<Color> c(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) c[static_cast<std::size_t>(v)] = v;
        return c;
    }
    if (k > 64) throw std::invalid_argument("k_coloring: k above 64 with k < n is not supported");
    Dsatur solver(g, k);
    if (!solver.run()) return std::nullopt;
    return solver.coloring();
}

ChromaticResult chromatic_number(const Graph& g)
{
    for (int k = 0;; ++k)
        if (auto c = k_coloring(g, k)) return {k, std::move(*c)};
}

bool is_proper_coloring(const Graph& g, const std::vector<Color>& coloring)
{
    if (static_cast<int>(coloring.size()) != g.num_vertices()) return false;
    for (const Edge& e : g.edges())
        if (coloring[static_cast<std::size_t>(e.u)] == coloring[static_cast<std::size_t>(e.v)]) return false;
    return true;
}

}  // namespace abch
