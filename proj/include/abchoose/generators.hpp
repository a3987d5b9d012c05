#pragma once

#include <string>
#include <vector>

#include "abchoose/graph.hpp"

namespace abch {

enum class Family { Cycle, Path, Complete, CompleteMultipartite, Theta, Grid, ConeOf, LineGraphOf };

/// Parameters for one of the named graph families.
///
/// `sizes` holds: n for cycle/path/complete; m_1..m_r for complete
/// multipartite; path lengths a,b,c for theta; rows,cols for grid.
/// ConeOf / LineGraphOf take their argument from the single entry of `base`.
struct FamilySpec {
    Family kind = Family::Path;
    std::vector<int> sizes;
    std::vector<FamilySpec> base;
};

/// Canonical numberings:
///  - cycle / path: 0,1,...,n-1 along the cycle/path;
///  - complete multipartite: parts consecutively, in the order given;
///  - theta(a,b,c): 0 and 1 are the two branch vertices, then the interior of
///    path a walking from 0, then of path b, then of path c;
///  - grid: row-major;
///  - cone: apex is the last vertex;
///  - line graph: vertex i is the i-th edge of Graph::edges().
/// Throws std::invalid_argument for invalid parameters.
Graph generate(const FamilySpec& spec);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph theta_graph(int a, int b, int c);
Graph grid_graph(int rows, int cols);

/// Parses "cycle:6", "path:4", "complete:4", "multipartite:3,3", "theta:2,2,4",
/// "grid:3,3", "cone:<spec>", "line:<spec>".
FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

}  // namespace abch
