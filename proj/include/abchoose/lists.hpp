#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "abchoose/graph.hpp"

namespace abch {

/// Per-vertex finite sets of non-negative colours, stored sorted and
/// deduplicated. Tagged so that lists S(v) and chosen subsets C(v) do not mix.
template <class Tag>
class VertexColorSets {
public:
    VertexColorSets() = default;
    explicit VertexColorSets(int n) : sets_(static_cast<std::size_t>(n)) {}
    explicit VertexColorSets(std::vector<std::vector<Color>> sets) : sets_(std::move(sets))
    {
        for (auto& s : sets_) normalize(s);
    }

    int size() const { return static_cast<int>(sets_.size()); }
    const std::vector<Color>& operator[](Vertex v) const { return sets_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Color>>& sets() const { return sets_; }

    void set(Vertex v, std::vector<Color> colors)
    {
        normalize(colors);
        sets_[static_cast<std::size_t>(v)] = std::move(colors);
    }

    std::size_t min_set_size() const
    {
        std::size_t m = sets_.empty() ? 0 : sets_.front().size();
        for (const auto& s : sets_) m = std::min(m, s.size());
        return m;
    }

    bool operator==(const VertexColorSets&) const = default;

private:
    static void normalize(std::vector<Color>& s);

    std::vector<std::vector<Color>> sets_;
};

struct ListTag {};
struct ChoiceTag {};

/// S(v): the colours available at each vertex.
using ListAssignment = VertexColorSets<ListTag>;
/// C(v): the colours picked at each vertex.
using Choice = VertexColorSets<ChoiceTag>;

/// Describes the first violated invariant (size, subset, cardinality b,
/// disjointness across an edge), or nullopt when `choice` is valid.
std::optional<std::string> choice_violation(const Graph& g, const ListAssignment& lists, const Choice& choice,
                                            int b);

inline bool is_valid_choice(const Graph& g, const ListAssignment& lists, const Choice& choice, int b)
{
    return !choice_violation(g, lists, choice, b).has_value();
}

/// Choice with a single colour per vertex from a proper colouring vector.
Choice choice_from_coloring(const std::vector<Color>& coloring);

/// All lists equal to {first, ..., first+size-1}.
ListAssignment uniform_lists(int n, int size, Color first = 1);

}  // namespace abch
