#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/lists.hpp"

namespace abch {

/// exp(-(np-k)^2 / (2pn)), an upper bound on Pr(X < k) for X ~ B(n, p).
/// Throws std::invalid_argument unless 0 < p <= 1, n >= 1 and k < pn.
double chernoff_bound(int n, double p, double k);

struct TailEstimate {
    double estimate = 0;
    /// Standard deviation of the estimate if the true probability equalled the bound.
    double sigma = 0;
    std::uint64_t samples = 0;
};

/// Fraction of `samples` draws of B(n, p) below k.
TailEstimate binomial_tail_estimate(int n, double p, double k, std::uint64_t samples, std::uint64_t seed);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t seed = 0;
    /// Index of the first successful trial, when there is one.
    std::optional<std::uint64_t> first_success;
    /// Choice produced by the first successful trial.
    std::optional<Choice> choice;

    double failure_rate() const
    {
        return trials == 0 ? 0.0 : 1.0 - static_cast<double>(successes) / static_cast<double>(trials);
    }
};

/// Seed of trial i; trials are independent of each other and of the worker count.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Random split of the colours among the colour classes of g.
///
/// Each trial maps every colour to a class uniformly at random. It succeeds
/// when every vertex of class i has at least k colours mapped to i; the
/// vertex then keeps the lowest k of them. All `max_trials` trials run.
/// Throws std::invalid_argument when a class is not independent, the
/// classes do not partition the vertices, a list has fewer than k colours,
/// or max_trials is 0.
TrialReport random_partition_choice(const Graph& g, const std::vector<std::vector<Vertex>>& classes, int k,
                                    const ListAssignment& lists, std::uint64_t seed, std::uint64_t max_trials,
                                    int jobs = 1);

/// Part sizes m_1..m_r of a complete multipartite graph.
struct MultipartiteSpec {
    std::vector<int> parts;

    int r() const { return static_cast<int>(parts.size()); }
    /// Average part size.
    double t() const;
    /// Part of each vertex of complete_multipartite(parts).
    std::vector<int> part_of_vertex() const;
};

/// Recursive random split on K_{m_1..m_r}; lists index its vertices part by part.
///
/// Parts are padded with parts of size 2 up to a power of two. A group of
/// parts with r <= t spreads its colours uniformly over its parts; otherwise
/// the group halves, and a colour goes to half j with probability
/// (k + log t_j) / (2k + log t_1 t_2). Padded parts only absorb colours.
TrialReport multipartite_random_choice(const MultipartiteSpec& spec, int k, const ListAssignment& lists,
                                       std::uint64_t seed, std::uint64_t max_trials, int jobs = 1);

struct Bound {
    double value = 0;
    /// Smallest integer at least `value`.
    std::int64_t ceiling = 0;
    /// False when the inequality's hypotheses fail for this input.
    bool applicable = true;
};

struct MultipartiteBounds {
    int r = 0;
    double t = 0;
    /// 948 r (k + log t), any r.
    Bound general;
    /// 474 r (k + log t), r a power of two.
    Bound power_of_two;
    /// 4 r (k + log t), r <= t.
    Bound few_parts;
};

/// Natural logarithms throughout. Throws std::invalid_argument for a part below 2 or k < 1.
MultipartiteBounds chk_upper_bounds(const MultipartiteSpec& spec, int k);

/// 948 chi (k + log(|V|/chi + 1)).
Bound chk_upper_bound_graph(int chromatic, int vertices, int k);

}  // namespace abch
