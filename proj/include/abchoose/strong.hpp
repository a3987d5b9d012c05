#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/lists.hpp"
#include "abchoose/oracle.hpp"

namespace abch {

/// Pairwise disjoint vertex sets; they need not cover the graph.
using BlockPartition = std::vector<std::vector<Vertex>>;

/// Throws std::invalid_argument on an out-of-range vertex or a vertex in two blocks.
void validate_blocks(int n, const BlockPartition& blocks);

/// g with every block turned into a clique. Existing edges are kept once.
Graph append_cliques(const Graph& g, const BlockPartition& blocks);

/// k-colouring oracle: colours 0..k-1 or nullopt.
using ColoringOracle = std::function<std::optional<std::vector<Color>>(const Graph&, int)>;

struct StrongColorabilityResult {
    Verdict verdict = Verdict::Inconclusive;
    /// Partitions whose appended graph was coloured.
    std::uint64_t partitions = 0;
    /// On No: blocks of size <= k whose appended graph is not k-colourable.
    /// Greedily shrunk (whole blocks dropped from the last one backwards,
    /// then single vertices) and re-checked.
    std::optional<BlockPartition> witness;
};

/// Every way of appending disjoint cliques of size <= k leaves g k-colourable.
///
/// Set partitions are generated as restricted-growth strings with a block
/// size cap. Only partitions where no two blocks fit together in one block
/// are coloured, since merging blocks only adds edges.
StrongColorabilityResult is_strongly_k_colorable(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

struct LiftResult {
    bool ok = false;
    /// Proper colouring of the appended graph with colours 0..k; colour k is the transversal S.
    std::vector<Color> coloring;
    std::vector<Vertex> transversal;
    /// On failure: "shrunken blocks" or "remaining blocks", the oracle call that failed.
    std::string failed_stage;
};

/// (k+1)-colouring of g with blocks of size <= k+1 appended, from a k-colouring oracle.
///
/// Each block of size k+1 loses its lowest vertex; a k-colouring of the
/// result gives, in colour 0, one vertex S_i of each shrunken block. Every
/// block then loses S_i, the rest is k-coloured again and S takes colour k.
LiftResult strong_color_lift(const Graph& g, const BlockPartition& blocks, int k, const ColoringOracle& oracle);
LiftResult strong_color_lift(const Graph& g, const BlockPartition& blocks, int k);

struct StrongLowerBoundInstance {
    Graph graph;
    /// V1 = B1 ∪ C1 ∪ D1, V2 = B2 ∪ C2 ∪ D2, V3 = A ∪ E.
    BlockPartition blocks;
    int d = 0;
    /// Sizes of A, B1, B2, C1, C2, D1, D2, E; vertices are numbered class by class in this order.
    std::array<int, 8> class_sizes{};
};

inline constexpr std::array<const char*, 8> kLowerBoundClassNames{"A", "B1", "B2", "C1", "C2", "D1", "D2", "E"};

/// Graph of maximum degree d whose appended graph needs 2d colours.
/// A is joined to B1 and B2, D1 to D2. d = 2r gives 12r-3 vertices, d = 2r+1 gives 12r+3.
StrongLowerBoundInstance schi_lower_bound_graph(int d);

/// List colouring oracle used on the refined instance: one colour per vertex from k-lists.
using ListColoringOracle = std::function<std::optional<std::vector<Color>>(const Graph&, const ListAssignment&)>;

struct BlockChoiceResult {
    bool ok = false;
    /// One colour per vertex, proper on g with the original blocks appended.
    Choice choice;
    /// Sub-blocks of size <= k the base solver ran on.
    BlockPartition refined_blocks;
    /// k colours kept at every vertex.
    ListAssignment kept;
    std::string failure;
};

/// Colours g with blocks of size <= km appended from lists of size >= km
/// (the lowest km colours of each list are used).
///
/// Each block, padded to km members by dummy vertices with fresh lists
/// (uncovered vertices count as blocks of one), is split by
/// partition_family into m sub-blocks whose kept k-subsets are disjoint
/// across sub-blocks. The base solver then colours g with the sub-blocks
/// appended from the kept lists. m = 1 calls the base solver directly.
BlockChoiceResult strong_choosable_block_choice(const Graph& g, const BlockPartition& blocks,
                                                const ListAssignment& lists, int k, int m,
                                                const ListColoringOracle& base);
BlockChoiceResult strong_choosable_block_choice(const Graph& g, const BlockPartition& blocks,
                                                const ListAssignment& lists, int k, int m);

}  // namespace abch
