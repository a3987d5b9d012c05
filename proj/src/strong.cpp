#include "abchoose/strong.hpp"

#include <algorithm>
#include <stdexcept>

#include "abchoose/coloring.hpp"
#include "abchoose/set_partition.hpp"

namespace abch {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

bool colorable(const Graph& g, const BlockPartition& blocks, int k)
{
    return k_coloring(append_cliques(g, blocks), k).has_value();
}

BlockPartition shrink_witness(const Graph& g, BlockPartition blocks, int k)
{
    std::erase_if(blocks, [](const auto& b) { return b.size() < 2; });
    for (std::size_t i = blocks.size(); i-- > 0;) {
        BlockPartition without = blocks;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (!colorable(g, without, k)) blocks = std::move(without);
    }
    for (std::size_t i = blocks.size(); i-- > 0;) {
        for (std::size_t j = blocks[i].size(); j-- > 0;) {
            BlockPartition trial = blocks;
            trial[i].erase(trial[i].begin() + static_cast<std::ptrdiff_t>(j));
            const bool gone = trial[i].size() < 2;
            if (gone) trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (colorable(g, trial, k)) continue;
            blocks = std::move(trial);
            if (gone) break;
        }
    }
    return blocks;
}

}  // namespace

void validate_blocks(int n, const BlockPartition& blocks)
{
    std::vector<int> owner(at(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (Vertex v : blocks[b]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("blocks: vertex " + std::to_string(v) + " out of range for n = " +
                                            std::to_string(n));
            if (owner[at(v)] != -1)
                throw std::invalid_argument("blocks: vertex " + std::to_string(v) + " lies in blocks " +
                                            std::to_string(owner[at(v)]) + " and " + std::to_string(b));
            owner[at(v)] = static_cast<int>(b);
        }
}

Graph append_cliques(const Graph& g, const BlockPartition& blocks)
{
    validate_blocks(g.num_vertices(), blocks);
    Graph h = g;
    for (const auto& block : blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) h.add_edge(block[i], block[j]);
    return h;
}

StrongColorabilityResult is_strongly_k_colorable(const Graph& g, int k, std::uint64_t budget)
{
    if (k < 1) throw std::invalid_argument("is_strongly_k_colorable: k must be at least 1");
    const int n = g.num_vertices();
    StrongColorabilityResult out;
    std::vector<int> label(at(n), 0);
    std::vector<int> sizes;
    std::uint64_t leaves = 0;
    bool stop = false;

    auto check_leaf = [&] {
        if (++leaves > budget) {
            stop = true;
            return;
        }
        std::vector<int> s = sizes;
        std::sort(s.begin(), s.end());
        if (s.size() >= 2 && s[0] + s[1] <= k) return;
        BlockPartition blocks(sizes.size());
        for (Vertex v = 0; v < n; ++v) blocks[at(label[at(v)])].push_back(v);
        ++out.partitions;
        if (!colorable(g, blocks, k)) {
            out.verdict = Verdict::No;
            out.witness = shrink_witness(g, std::move(blocks), k);
            stop = true;
        }
    };

    auto walk = [&](auto&& self, Vertex v) -> void {
        if (stop) return;
        if (v == n) {
            check_leaf();
            return;
        }
        for (std::size_t b = 0; b < sizes.size() && !stop; ++b) {
            if (sizes[b] >= k) continue;
            label[at(v)] = static_cast<int>(b);
            ++sizes[b];
            self(self, v + 1);
            --sizes[b];
        }
        if (stop) return;
        label[at(v)] = static_cast<int>(sizes.size());
        sizes.push_back(1);
        self(self, v + 1);
        sizes.pop_back();
    };
    walk(walk, 0);

    if (out.verdict == Verdict::No) {
        if (colorable(g, *out.witness, k))
            throw std::logic_error("is_strongly_k_colorable: witness failed re-verification");
        return out;
    }
    out.verdict = stop ? Verdict::Inconclusive : Verdict::Yes;
    return out;
}

LiftResult strong_color_lift(const Graph& g, const BlockPartition& blocks, int k, const ColoringOracle& oracle)
{
    if (k < 1) throw std::invalid_argument("strong_color_lift: k must be at least 1");
    validate_blocks(g.num_vertices(), blocks);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (static_cast<int>(blocks[i].size()) > k + 1)
            throw std::invalid_argument("strong_color_lift: block " + std::to_string(i) + " has more than k+1 vertices");

    auto checked = [&](const Graph& h) -> std::optional<std::vector<Color>> {
        auto c = oracle(h, k);
        if (!c) return std::nullopt;
        if (!is_proper_coloring(h, *c) ||
            std::any_of(c->begin(), c->end(), [&](Color x) { return x < 0 || x >= k; }))
            throw std::logic_error("strong_color_lift: oracle returned an invalid colouring");
        return c;
    };

    LiftResult out;
    BlockPartition shrunk;
    std::vector<std::size_t> full;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<Vertex> b = blocks[i];
        if (static_cast<int>(b.size()) == k + 1) {
            full.push_back(i);
            b.erase(std::min_element(b.begin(), b.end()));
        }
        shrunk.push_back(std::move(b));
    }
    auto first = checked(append_cliques(g, shrunk));
    if (!first) {
        out.failed_stage = "shrunken blocks";
        return out;
    }
    std::vector<char> in_s(at(g.num_vertices()), 0);
    BlockPartition remaining = blocks;
    for (std::size_t i : full) {
        auto it = std::find_if(shrunk[i].begin(), shrunk[i].end(), [&](Vertex v) { return (*first)[at(v)] == 0; });
        if (it == shrunk[i].end()) throw std::logic_error("strong_color_lift: a k-clique misses colour 0");
        out.transversal.push_back(*it);
        in_s[at(*it)] = 1;
        std::erase(remaining[i], *it);
    }
    auto second = checked(append_cliques(g, remaining));
    if (!second) {
        out.failed_stage = "remaining blocks";
        return out;
    }
    out.coloring = *second;
    for (Vertex v : out.transversal) out.coloring[at(v)] = k;
    std::sort(out.transversal.begin(), out.transversal.end());
    if (!is_proper_coloring(append_cliques(g, blocks), out.coloring))
        throw std::logic_error("strong_color_lift: lifted colouring is not proper");
    out.ok = true;
    return out;
}

LiftResult strong_color_lift(const Graph& g, const BlockPartition& blocks, int k)
{
    return strong_color_lift(g, blocks, k, [](const Graph& h, int kk) { return k_coloring(h, kk); });
}

StrongLowerBoundInstance schi_lower_bound_graph(int d)
{
    if (d < 2) throw std::invalid_argument("schi_lower_bound_graph: d must be at least 2");
    StrongLowerBoundInstance inst;
    inst.d = d;
    const int r = d / 2;
    if (d % 2 == 0) inst.class_sizes = {2 * r, r, r, r - 1, r - 1, 2 * r, 2 * r, 2 * r - 1};
    else inst.class_sizes = {2 * r + 1, r + 1, r, r - 1, r, 2 * r + 1, 2 * r + 1, 2 * r};

    std::array<std::vector<Vertex>, 8> cls;
    Vertex next = 0;
    for (std::size_t c = 0; c < 8; ++c)
        for (int i = 0; i < inst.class_sizes[c]; ++i) cls[c].push_back(next++);
    enum { A, B1, B2, C1, C2, D1, D2, E };

    std::vector<Edge> edges;
    for (Vertex a : cls[A]) {
        for (Vertex b : cls[B1]) edges.push_back({a, b});
        for (Vertex b : cls[B2]) edges.push_back({a, b});
    }
    for (Vertex x : cls[D1])
        for (Vertex y : cls[D2]) edges.push_back({x, y});
    inst.graph = Graph(next, edges);

    auto join = [&](std::initializer_list<int> parts) {
        std::vector<Vertex> block;
        for (int p : parts) block.insert(block.end(), cls[at(p)].begin(), cls[at(p)].end());
        std::sort(block.begin(), block.end());
        return block;
    };
    inst.blocks = {join({B1, C1, D1}), join({B2, C2, D2}), join({A, E})};
    return inst;
}

BlockChoiceResult strong_choosable_block_choice(const Graph& g, const BlockPartition& blocks,
                                                const ListAssignment& lists, int k, int m,
                                                const ListColoringOracle& base)
{
    const int n = g.num_vertices();
    if (k < 1 || m < 1) throw std::invalid_argument("strong_choosable_block_choice: k and m must be at least 1");
    validate_blocks(n, blocks);
    if (lists.size() != n) throw std::invalid_argument("strong_choosable_block_choice: list assignment does not match the graph");
    const int km = k * m;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (static_cast<int>(blocks[i].size()) > km)
            throw std::invalid_argument("strong_choosable_block_choice: block " + std::to_string(i) +
                                        " has more than km vertices");
    std::vector<std::vector<Color>> trimmed(at(n));
    Color fresh = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (static_cast<int>(lists[v].size()) < km)
            throw std::invalid_argument("strong_choosable_block_choice: list of vertex " + std::to_string(v) +
                                        " has fewer than km colours");
        trimmed[at(v)].assign(lists[v].begin(), lists[v].begin() + km);
        fresh = std::max(fresh, lists[v].back() + 1);
    }

    BlockChoiceResult out;
    if (m == 1) {
        out.refined_blocks = blocks;
        out.kept = ListAssignment(trimmed);
    } else {
        BlockPartition all = blocks;
        std::vector<char> covered(at(n), 0);
        for (const auto& b : blocks)
            for (Vertex v : b) covered[at(v)] = 1;
        for (Vertex v = 0; v < n; ++v)
            if (!covered[at(v)]) all.push_back({v});

        std::vector<std::vector<Color>> kept(at(n));
        for (const auto& block : all) {
            SetFamily fam;
            for (Vertex v : block) fam.push_back(trimmed[at(v)]);
            while (static_cast<int>(fam.size()) < km) {
                std::vector<int> dummy;
                for (int i = 0; i < km; ++i) dummy.push_back(fresh++);
                fam.push_back(std::move(dummy));
            }
            FamilyPartition part = partition_family(fam, k, m);
            for (const auto& group : part.groups) {
                std::vector<Vertex> sub;
                for (int idx : group)
                    if (idx < static_cast<int>(block.size())) {
                        sub.push_back(block[at(idx)]);
                        kept[at(block[at(idx)])] = part.chosen[at(idx)];
                    }
                std::sort(sub.begin(), sub.end());
                if (!sub.empty()) out.refined_blocks.push_back(std::move(sub));
            }
        }
        out.kept = ListAssignment(std::move(kept));
    }

    auto colors = base(append_cliques(g, out.refined_blocks), out.kept);
    if (!colors) {
        out.failure = "base solver found no colouring of the refined instance";
        return out;
    }
    out.choice = choice_from_coloring(*colors);
    const Graph target = append_cliques(g, blocks);
    if (auto bad = choice_violation(target, lists, out.choice, 1)) {
        out.failure = "base solver returned an invalid colouring: " + *bad;
        return out;
    }
    out.ok = true;
    return out;
}

BlockChoiceResult strong_choosable_block_choice(const Graph& g, const BlockPartition& blocks,
                                                const ListAssignment& lists, int k, int m)
{
    return strong_choosable_block_choice(g, blocks, lists, k, m,
                                         [](const Graph& h, const ListAssignment& l) -> std::optional<std::vector<Color>> {
                                             auto r = find_list_coloring(h, l, 1);
                                             if (r.status != SearchStatus::Found) return std::nullopt;
                                             std::vector<Color> c;
                                             for (Vertex v = 0; v < h.num_vertices(); ++v) c.push_back((*r.choice)[v][0]);
                                             return c;
                                         });
}

}  // namespace abch
