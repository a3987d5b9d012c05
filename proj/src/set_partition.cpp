#include "abchoose/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace abch {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void require_shape(const SetFamily& fam, int count, int size, const char* who)
{
    if (static_cast<int>(fam.size()) != count)
        throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(count) + " sets, got " +
                                    std::to_string(fam.size()));
    for (std::size_t i = 0; i < fam.size(); ++i) {
        std::vector<int> s = fam[i];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument(std::string(who) + ": set " + std::to_string(i) + " repeats an element");
        if (static_cast<int>(s.size()) != size)
            throw std::invalid_argument(std::string(who) + ": set " + std::to_string(i) + " has size " +
                                        std::to_string(s.size()) + ", expected " + std::to_string(size));
    }
}

bool subset_of(const std::vector<int>& a, std::vector<int> b)
{
    std::sort(b.begin(), b.end());
    return std::all_of(a.begin(), a.end(), [&](int x) { return std::binary_search(b.begin(), b.end(), x); });
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::none_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

}  // namespace

SplitResult split_family(const SetFamily& fam, int k, int l)
{
    if (k < 1 || l < 1) throw std::invalid_argument("split_family: k and l must be at least 1");
    require_shape(fam, k + l, k + l, "split_family");
    const int total = k + l;

    std::vector<int> universe;
    for (const auto& s : fam) universe.insert(universe.end(), s.begin(), s.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    // in_a[i] = |fam[i] ∩ A|; B grows from the top of the universe.
    std::vector<int> in_a(at(total), total);
    auto above_k = [&] { return std::count_if(in_a.begin(), in_a.end(), [&](int x) { return x > k; }); };
    std::size_t moved = 0;
    bool crossed = false;
    while (moved < universe.size()) {
        const long before = above_k();
        const int c = universe[universe.size() - 1 - moved];
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (std::find(fam[i].begin(), fam[i].end(), c) != fam[i].end()) --in_a[i];
        ++moved;
        if (before > k && above_k() <= k) {
            crossed = true;
            break;
        }
    }
    if (!crossed) throw std::logic_error("split_family: sweep never crossed the threshold");
    const int cut = universe[universe.size() - moved];  // A' = elements below cut

    SplitResult r;
    r.chosen.resize(fam.size());
    std::vector<int> middle;
    for (int i = 0; i < total; ++i) {
        if (in_a[at(i)] > k) r.first.push_back(i);
        else if (in_a[at(i)] < k) r.second.push_back(i);
        else middle.push_back(i);
    }
    if (static_cast<int>(r.first.size()) > k || static_cast<int>(r.second.size()) >= l + 1)
        throw std::logic_error("split_family: class sizes contradict the sweep");
    for (int i : middle) {
        if (static_cast<int>(r.first.size()) < k) r.first.push_back(i);
        else r.second.push_back(i);
    }
    std::sort(r.first.begin(), r.first.end());
    std::sort(r.second.begin(), r.second.end());

    for (int i : r.first) {
        std::vector<int> s = fam[at(i)];
        std::sort(s.begin(), s.end());
        r.chosen[at(i)].assign(s.begin(), s.begin() + k);
        if (r.chosen[at(i)].back() >= cut) throw std::logic_error("split_family: first side reached into B");
    }
    for (int i : r.second) {
        std::vector<int> s = fam[at(i)];
        std::sort(s.begin(), s.end());
        auto from = std::lower_bound(s.begin(), s.end(), cut);
        if (s.end() - from < l) throw std::logic_error("split_family: second side short of elements in B");
        r.chosen[at(i)].assign(from, from + l);
    }
    if (auto bad = split_violation(fam, k, l, r)) throw std::logic_error("split_family: " + *bad);
    return r;
}

FamilyPartition partition_family(const SetFamily& fam, int k, int m)
{
    if (k < 1 || m < 1) throw std::invalid_argument("partition_family: k and m must be at least 1");
    require_shape(fam, k * m, k * m, "partition_family");
    FamilyPartition p;
    p.chosen.resize(fam.size());
    if (m == 1) {
        std::vector<int> group;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            std::vector<int> s = fam[i];
            std::sort(s.begin(), s.end());
            p.chosen[i].assign(s.begin(), s.begin() + k);
            group.push_back(static_cast<int>(i));
        }
        p.groups.push_back(std::move(group));
        return p;
    }

    SplitResult split = split_family(fam, k, k * (m - 1));
    p.groups.push_back(split.first);
    for (int i : split.first) p.chosen[at(i)] = split.chosen[at(i)];

    SetFamily rest;
    for (int i : split.second) rest.push_back(split.chosen[at(i)]);
    FamilyPartition sub = partition_family(rest, k, m - 1);
    for (const auto& g : sub.groups) {
        std::vector<int> group;
        for (int j : g) group.push_back(split.second[at(j)]);
        p.groups.push_back(std::move(group));
    }
    for (std::size_t j = 0; j < rest.size(); ++j) p.chosen[at(split.second[j])] = sub.chosen[j];
    if (auto bad = partition_violation(fam, k, m, p)) throw std::logic_error("partition_family: " + *bad);
    return p;
}

std::optional<std::string> split_violation(const SetFamily& fam, int k, int l, const SplitResult& r)
{
    if (static_cast<int>(r.first.size()) != k || static_cast<int>(r.second.size()) != l)
        return "side sizes " + std::to_string(r.first.size()) + "/" + std::to_string(r.second.size());
    std::vector<int> seen;
    seen.insert(seen.end(), r.first.begin(), r.first.end());
    seen.insert(seen.end(), r.second.begin(), r.second.end());
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < static_cast<int>(seen.size()); ++i)
        if (seen[at(i)] != i) return std::string("sides do not partition the family");
    if (r.chosen.size() != fam.size()) return std::string("chosen subsets do not cover the family");
    for (int i : r.first)
        if (static_cast<int>(r.chosen[at(i)].size()) != k || !subset_of(r.chosen[at(i)], fam[at(i)]))
            return "set " + std::to_string(i) + " does not keep k of its elements";
    for (int i : r.second)
        if (static_cast<int>(r.chosen[at(i)].size()) != l || !subset_of(r.chosen[at(i)], fam[at(i)]))
            return "set " + std::to_string(i) + " does not keep l of its elements";
    for (int i : r.first)
        for (int j : r.second)
            if (!disjoint(r.chosen[at(i)], r.chosen[at(j)]))
                return "sets " + std::to_string(i) + " and " + std::to_string(j) + " share a kept element";
    return std::nullopt;
}

std::optional<std::string> partition_violation(const SetFamily& fam, int k, int m, const FamilyPartition& p)
{
    if (static_cast<int>(p.groups.size()) != m) return "expected " + std::to_string(m) + " groups";
    std::vector<int> group_of(fam.size(), -1);
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
        if (static_cast<int>(p.groups[g].size()) != k) return "group " + std::to_string(g) + " does not hold k sets";
        for (int i : p.groups[g]) {
            if (i < 0 || i >= static_cast<int>(fam.size()) || group_of[at(i)] != -1)
                return "set index " + std::to_string(i) + " misplaced";
            group_of[at(i)] = static_cast<int>(g);
        }
    }
    if (p.chosen.size() != fam.size()) return std::string("chosen subsets do not cover the family");
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (static_cast<int>(p.chosen[i].size()) != k || !subset_of(p.chosen[i], fam[i]))
            return "set " + std::to_string(i) + " does not keep k of its elements";
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (group_of[i] != group_of[j] && !disjoint(p.chosen[i], p.chosen[j]))
                return "sets " + std::to_string(i) + " and " + std::to_string(j) + " in different groups share an element";
    return std::nullopt;
}

}  // namespace abch
