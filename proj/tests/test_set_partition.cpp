#include <doctest.h>

#include <stdexcept>

#include "abchoose/set_partition.hpp"
#include "support.hpp"

using namespace abch;

namespace {

// Independent restatement of the split requirements.
bool split_ok(const SetFamily& fam, int k, int l, const SplitResult& r)
{
    if (static_cast<int>(r.first.size()) != k || static_cast<int>(r.second.size()) != l) return false;
    if (r.chosen.size() != fam.size()) return false;
    std::vector<int> side(fam.size(), -1);
    for (int i : r.first) side[static_cast<std::size_t>(i)] = 0;
    for (int i : r.second) {
        if (side[static_cast<std::size_t>(i)] != -1) return false;
        side[static_cast<std::size_t>(i)] = 1;
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto& c = r.chosen[i];
        if (static_cast<int>(c.size()) != (side[i] == 0 ? k : l)) return false;
        for (int x : c)
            if (std::find(fam[i].begin(), fam[i].end(), x) == fam[i].end()) return false;
    }
    for (int i : r.first)
        for (int j : r.second)
            for (int x : r.chosen[static_cast<std::size_t>(i)])
                if (std::find(r.chosen[static_cast<std::size_t>(j)].begin(), r.chosen[static_cast<std::size_t>(j)].end(), x) !=
                    r.chosen[static_cast<std::size_t>(j)].end())
                    return false;
    return true;
}

bool partition_ok(const SetFamily& fam, int k, int m, const FamilyPartition& p)
{
    if (static_cast<int>(p.groups.size()) != m) return false;
    std::vector<int> group(fam.size(), -1);
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
        if (static_cast<int>(p.groups[g].size()) != k) return false;
        for (int i : p.groups[g]) {
            if (group[static_cast<std::size_t>(i)] != -1) return false;
            group[static_cast<std::size_t>(i)] = static_cast<int>(g);
        }
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (static_cast<int>(p.chosen[i].size()) != k) return false;
        for (int x : p.chosen[i])
            if (std::find(fam[i].begin(), fam[i].end(), x) == fam[i].end()) return false;
        for (std::size_t j = 0; j < fam.size(); ++j) {
            if (group[i] == group[j]) continue;
            for (int x : p.chosen[i])
                if (std::find(p.chosen[j].begin(), p.chosen[j].end(), x) != p.chosen[j].end()) return false;
        }
    }
    return true;
}

SetFamily random_family(ref::Rng& rng, int count, int size, int universe)
{
    std::vector<int> all(static_cast<std::size_t>(universe));
    std::iota(all.begin(), all.end(), 0);
    SetFamily fam;
    for (int i = 0; i < count; ++i) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> s(all.begin(), all.begin() + size);
        std::sort(s.begin(), s.end());
        fam.push_back(s);
    }
    return fam;
}

}  // namespace

TEST_SUITE("set-partition") {

TEST_CASE("split examples")
{
    auto r = split_family({{1, 2}, {1, 2}}, 1, 1);
    CHECK(r.first == std::vector<int>{0});
    CHECK(r.second == std::vector<int>{1});
    CHECK(r.chosen[0] == std::vector<int>{1});
    CHECK(r.chosen[1] == std::vector<int>{2});

    SetFamily four(4, {1, 2, 3, 4});
    auto s = split_family(four, 2, 2);
    CHECK(split_ok(four, 2, 2, s));
    for (int i : s.first) CHECK(s.chosen[static_cast<std::size_t>(i)] == std::vector<int>{1, 2});
    for (int i : s.second) CHECK(s.chosen[static_cast<std::size_t>(i)] == std::vector<int>{3, 4});

    SetFamily mixed{{1, 2, 3}, {1, 2, 3}, {4, 5, 6}};
    auto t = split_family(mixed, 1, 2);
    CHECK(split_ok(mixed, 1, 2, t));
    CHECK_FALSE(split_violation(mixed, 1, 2, t).has_value());
}

TEST_CASE("split rejects malformed families")
{
    CHECK_THROWS_AS(split_family({{1, 2}}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(split_family({{1, 2}, {1, 2, 3}}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(split_family({{1, 1}, {1, 2}}, 1, 1), std::invalid_argument);
}

TEST_CASE("violation checker catches broken splits")
{
    SplitResult bad{{0}, {1}, {{1}, {1}}};
    CHECK(split_violation({{1, 2}, {1, 2}}, 1, 1, bad).has_value());
    CHECK_FALSE(split_ok({{1, 2}, {1, 2}}, 1, 1, bad));
}

TEST_CASE("partition examples")
{
    SetFamily one{{5, 1, 3}, {2, 4, 6}, {7, 8, 9}};
    auto p = partition_family(one, 3, 1);
    CHECK(p.groups == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(p.chosen[0] == std::vector<int>{1, 3, 5});

    auto q = partition_family({{1, 2}, {1, 2}}, 1, 2);
    CHECK(q.groups.size() == 2);
    CHECK(partition_ok({{1, 2}, {1, 2}}, 1, 2, q));
    CHECK(q.chosen[0] != q.chosen[1]);

    ref::Rng rng(71);
    SetFamily four = random_family(rng, 4, 4, 6);
    auto r = partition_family(four, 2, 2);
    CHECK(partition_ok(four, 2, 2, r));
    CHECK_FALSE(partition_violation(four, 2, 2, r).has_value());
}

TEST_CASE("random splits satisfy the requirements and are deterministic")
{
    ref::Rng rng(73);
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
            for (int trial = 0; trial < 150; ++trial) {
                const int s = k + l;
                std::uniform_int_distribution<int> uni(s, std::min(32, 3 * s));
                SetFamily fam = random_family(rng, s, s, uni(rng));
                auto r = split_family(fam, k, l);
                CHECK(split_ok(fam, k, l, r));
                auto again = split_family(fam, k, l);
                CHECK(again.first == r.first);
                CHECK(again.chosen == r.chosen);
            }
}

TEST_CASE("random partitions satisfy the requirements")
{
    ref::Rng rng(79);
    for (int k = 1; k <= 4; ++k)
        for (int m = 1; m <= 4; ++m)
            for (int trial = 0; trial < 60; ++trial) {
                const int s = k * m;
                std::uniform_int_distribution<int> uni(s, std::min(32, 2 * s + 2));
                SetFamily fam = random_family(rng, s, s, uni(rng));
                auto p = partition_family(fam, k, m);
                CHECK(partition_ok(fam, k, m, p));
            }
}

}  // TEST_SUITE
