#pragma once

#include <optional>
#include <vector>

#include "abchoose/graph.hpp"

namespace abch {

/// Proper colouring with colours 0..k-1, or nullopt if none exists.
///
/// DSATUR branching with colour-symmetry breaking: a vertex may only open
/// the next unused colour. Complete for every k; k >= n is answered directly.
std::optional<std::vector<Color>> k_coloring(const Graph& g, int k);

struct ChromaticResult {
    int chromatic_number = 0;
    std::vector<Color> coloring;
};

ChromaticResult chromatic_number(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<Color>& coloring);

}  // namespace abch
