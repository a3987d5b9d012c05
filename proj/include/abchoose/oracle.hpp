#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/lists.hpp"

namespace abch {

enum class SearchStatus { Found, None, Inconclusive };

const char* to_string(SearchStatus s);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Budget taken from ABCHOOSE_BUDGET when set to a positive integer, else kDefaultBudget.
std::uint64_t default_budget();

struct ListColoringResult {
    SearchStatus status = SearchStatus::None;
    std::optional<Choice> choice;
    /// b-subsets tried by the backtracking search.
    std::uint64_t nodes = 0;
};

/// Picks b colours per vertex from its list with adjacent picks disjoint.
///
/// Vertices with |S(v)| >= b(deg(v)+1) in what is left of the graph are
/// peeled off and coloured greedily at the end. The rest is backtracking over
/// b-subsets of the remaining colours, branching on the vertex with the fewest
/// available colours and pruning when a neighbour drops below b. Exceeding
/// `node_budget` gives Inconclusive, never None.
ListColoringResult find_list_coloring(const Graph& g, const ListAssignment& lists, int b,
                                      std::uint64_t node_budget = kDefaultBudget);

enum class Verdict { Yes, No, Inconclusive };

const char* to_string(Verdict v);

struct OracleOptions {
    /// Maximum number of list assignments handed to the inner solver.
    std::uint64_t budget = default_budget();
    /// Node budget of each inner solve.
    std::uint64_t solver_budget = kDefaultBudget;
    /// Worker threads over enumeration prefixes.
    int jobs = 1;
    /// Restrict the lists of vertices whose neighbours all come earlier to
    /// subsets of the union of their neighbours' lists. Never changes a verdict.
    bool prune_closers = true;
    /// Called with the running assignment count every 2^20 assignments.
    std::function<void(std::uint64_t)> progress;
};

struct ChoosabilityVerdict {
    Verdict verdict = Verdict::Inconclusive;
    /// Assignments checked. With jobs > 1 and a refutation the count depends on scheduling.
    std::uint64_t assignments = 0;
    std::uint64_t budget = 0;
    /// Refuting assignment on the whole graph; re-verified before it is returned.
    std::optional<ListAssignment> witness;
    /// Vertices removed before enumeration because their list is long enough.
    std::vector<Vertex> peeled;
    std::string note;
};

/// Every assignment of lists of size sizes[v] admits b colours per vertex.
ChoosabilityVerdict decide_choosability(const Graph& g, const std::vector<int>& sizes, int b,
                                        const OracleOptions& opt = {});

ChoosabilityVerdict is_ab_choosable(const Graph& g, int a, int b, const OracleOptions& opt = {});

/// f-choosability picks one colour per vertex.
ChoosabilityVerdict is_f_choosable(const Graph& g, const std::vector<int>& f, const OracleOptions& opt = {});

struct ChoiceNumberResult {
    Verdict verdict = Verdict::Inconclusive;
    /// Least a with (a:b) choosability; meaningful when verdict is Yes.
    int value = 0;
    std::uint64_t assignments = 0;
};

/// Searches a = b, b+1, ... up to b(degeneracy+1), which always suffices.
ChoiceNumberResult choice_number(const Graph& g, int b, const OracleOptions& opt = {});

/// Canonical list assignments with sizes[v] colours at vertex v: vertex by
/// vertex, each list is a set of colours already used together with a block
/// of consecutive fresh colours. Colours start at 1. Every assignment is
/// equal to one of these up to renaming colours.
void for_each_canonical_assignment(const std::vector<int>& sizes,
                                   const std::function<bool(const ListAssignment&)>& visit);

std::uint64_t count_canonical_assignments(const std::vector<int>& sizes);

struct HalveResult {
    SearchStatus status = SearchStatus::None;
    /// Proper colouring from the original lists when status is Found.
    std::vector<Color> coloring;
    /// Blown-up lists T(v), each colour c replaced by its block of k integers.
    ListAssignment blown_lists;
    std::optional<Choice> blown_choice;
};

/// Colouring from 2m-lists obtained through a (2mk:mk) choice on blown-up lists.
/// The colour kept at v is the one whose block holds more than k/2 of C(v).
/// Throws std::invalid_argument for even k or a list not of size 2m.
HalveResult halve_choice(const Graph& g, const ListAssignment& lists2m, int m, int k,
                         std::uint64_t node_budget = kDefaultBudget);

}  // namespace abch
