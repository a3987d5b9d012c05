#pragma once

#include <optional>
#include <string>
#include <vector>

namespace abch {

/// Ordered family of finite integer sets; each set is kept sorted.
using SetFamily = std::vector<std::vector<int>>;

struct SplitResult {
    /// Indices into the family; |first| = k, |second| = l, both ascending.
    std::vector<int> first;
    std::vector<int> second;
    /// chosen[i]: the k-subset (i in first) or l-subset (i in second) kept from set i.
    std::vector<std::vector<int>> chosen;
};

/// Splits k+l sets of size k+l into k sets keeping k elements and l sets
/// keeping l elements, no element shared across the two sides.
///
/// Elements of the union move from A to B one at a time, largest first,
/// until the number of sets with more than k elements in A drops to at most
/// k. Those sets, topped up with the lowest-index sets holding exactly k
/// elements of A, form the first side and keep their lowest k elements of
/// A; the rest keep their lowest l elements of B.
SplitResult split_family(const SetFamily& fam, int k, int l);

struct FamilyPartition {
    /// m groups of k set indices each.
    std::vector<std::vector<int>> groups;
    /// chosen[i]: k elements of set i, disjoint from the chosen elements of every other group.
    std::vector<std::vector<int>> chosen;
};

/// Partitions km sets of size km into m groups of k, peeling one group at a
/// time with split_family(k, k(m-1)) and recursing on the kept subsets.
FamilyPartition partition_family(const SetFamily& fam, int k, int m);

/// First broken requirement of a split, or nullopt.
std::optional<std::string> split_violation(const SetFamily& fam, int k, int l, const SplitResult& r);
std::optional<std::string> partition_violation(const SetFamily& fam, int k, int m, const FamilyPartition& p);

}  // namespace abch
