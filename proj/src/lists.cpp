#include "abchoose/lists.hpp"

#include <algorithm>
#include <stdexcept>

namespace abch {

template <class Tag>
void VertexColorSets<Tag>::normalize(std::vector<Color>& s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.front() < 0) throw std::invalid_argument("colour sets: colours must be non-negative");
}

template class VertexColorSets<ListTag>;
template class VertexColorSets<ChoiceTag>;

std::optional<std::string> choice_violation(const Graph& g, const ListAssignment& lists, const Choice& choice,
                                            int b)
{
    const int n = g.num_vertices();
    if (lists.size() != n || choice.size() != n)
        return "size mismatch: graph has " + std::to_string(n) + " vertices, lists " + std::to_string(lists.size()) +
               ", choice " + std::to_string(choice.size());
    for (Vertex v = 0; v < n; ++v) {
        const auto& c = choice[v];
        if (static_cast<int>(c.size()) != b)
            return "vertex " + std::to_string(v) + " has " + std::to_string(c.size()) + " colours, expected " +
                   std::to_string(b);
        if (!std::includes(lists[v].begin(), lists[v].end(), c.begin(), c.end()))
            return "vertex " + std::to_string(v) + " picks a colour outside its list";
    }
    for (const Edge& e : g.edges()) {
        const auto& cu = choice[e.u];
        const auto& cv = choice[e.v];
        std::vector<Color> common;
        std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(common));
        if (!common.empty())
            return "adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) + " share colour " +
                   std::to_string(common.front());
    }
    return std::nullopt;
}

Choice choice_from_coloring(const std::vector<Color>& coloring)
{
    Choice c(static_cast<int>(coloring.size()));
    for (std::size_t v = 0; v < coloring.size(); ++v) c.set(static_cast<Vertex>(v), {coloring[v]});
    return c;
}

ListAssignment uniform_lists(int n, int size, Color first)
{
    std::vector<Color> list(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) list[static_cast<std::size_t>(i)] = first + i;
    return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), list));
}

}  // namespace abch
