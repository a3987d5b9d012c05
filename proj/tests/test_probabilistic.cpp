#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "abchoose/generators.hpp"
#include "abchoose/probabilistic.hpp"
#include "support.hpp"

using namespace abch;

TEST_SUITE("probabilistic") {

TEST_CASE("binomial tail bound values")
{
    CHECK(chernoff_bound(100, 0.3, 20) == doctest::Approx(std::exp(-100.0 / 60.0)));
    CHECK(chernoff_bound(100, 0.3, 20) == doctest::Approx(0.18888).epsilon(1e-4));
    CHECK(chernoff_bound(2, 1.0, 0) == doctest::Approx(std::exp(-1.0)));
    CHECK(chernoff_bound(100, 0.3, 29.9999) > 0.9999);
    CHECK_THROWS_AS(chernoff_bound(100, 0.3, 30), std::invalid_argument);
    CHECK_THROWS_AS(chernoff_bound(100, 0.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(chernoff_bound(100, 1.5, 1), std::invalid_argument);
}

TEST_CASE("empirical tail stays under the bound")
{
    for (double k : {15.0, 20.0, 25.0}) {
        auto est = binomial_tail_estimate(100, 0.3, k, 200'000, 7);
        CHECK(est.estimate <= chernoff_bound(100, 0.3, k) + 3 * est.sigma);
    }
}

TEST_CASE("random partition choice")
{
    Graph empty(5);
    std::vector<std::vector<Vertex>> one{{0, 1, 2, 3, 4}};
    ref::Rng rng(109);
    auto lists = ref::random_lists(rng, std::vector<int>(5, 3), 6);
    auto r = random_partition_choice(empty, one, 3, lists, 1, 1);
    REQUIRE(r.choice.has_value());
    CHECK(r.first_success == 0u);
    CHECK(r.choice->sets() == lists.sets());

    Graph c6 = cycle_graph(6);
    std::vector<std::vector<Vertex>> halves{{0, 2, 4}, {1, 3, 5}};
    auto cl = ref::random_lists(rng, std::vector<int>(6, 6), 10);
    auto rep = random_partition_choice(c6, halves, 1, cl, 5, 10'000);
    CHECK(rep.trials == 10'000u);
    REQUIRE(rep.choice.has_value());
    CHECK(ref::choice_ok(c6, cl, *rep.choice, 1));
    CHECK(rep.successes > 8000u);

    CHECK_THROWS_AS(random_partition_choice(c6, halves, 1, cl, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_partition_choice(c6, {{0, 1, 2}, {3, 4, 5}}, 1, cl, 5, 10), std::invalid_argument);
    CHECK_THROWS_AS(random_partition_choice(c6, {{0, 2}, {1, 3, 5}}, 1, cl, 5, 10), std::invalid_argument);
}

TEST_CASE("trials are reproducible and independent of the worker count")
{
    Graph c6 = cycle_graph(6);
    std::vector<std::vector<Vertex>> halves{{0, 2, 4}, {1, 3, 5}};
    ref::Rng rng(113);
    auto cl = ref::random_lists(rng, std::vector<int>(6, 3), 6);
    auto a = random_partition_choice(c6, halves, 1, cl, 99, 500);
    auto b = random_partition_choice(c6, halves, 1, cl, 99, 500, 4);
    CHECK(a.successes == b.successes);
    CHECK(a.first_success == b.first_success);
    if (a.choice) CHECK(a.choice->sets() == b.choice->sets());
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("multipartite random choice")
{
    ref::Rng rng(127);
    MultipartiteSpec single{{4}};
    auto l1 = ref::random_lists(rng, std::vector<int>(4, 2), 5);
    auto r1 = multipartite_random_choice(single, 2, l1, 3, 1);
    REQUIRE(r1.choice.has_value());
    CHECK(r1.choice->sets() == l1.sets());

    MultipartiteSpec k22{{2, 2}};
    Graph g = complete_multipartite(k22.parts);
    auto l = ref::random_lists(rng, std::vector<int>(4, 8), 12);
    auto r = multipartite_random_choice(k22, 1, l, 11, 200);
    REQUIRE(r.choice.has_value());
    CHECK(ref::choice_ok(g, l, *r.choice, 1));

    MultipartiteSpec three{{2, 3, 2}};
    Graph h = complete_multipartite(three.parts);
    auto lh = ref::random_lists(rng, std::vector<int>(7, 12), 20);
    auto rh = multipartite_random_choice(three, 1, lh, 13, 500);
    REQUIRE(rh.choice.has_value());
    CHECK(ref::choice_ok(h, lh, *rh.choice, 1));

    // Many parts take the biased split route.
    MultipartiteSpec many{{2, 2, 2, 2, 2, 2, 2, 2}};
    Graph m = complete_multipartite(many.parts);
    auto lm = ref::random_lists(rng, std::vector<int>(16, 24), 40);
    auto rm = multipartite_random_choice(many, 1, lm, 17, 2000);
    if (rm.choice) CHECK(ref::choice_ok(m, lm, *rm.choice, 1));
    CHECK(rm.trials == 2000u);

    CHECK_THROWS_AS(multipartite_random_choice(k22, 3, l1, 1, 1), std::invalid_argument);
}

TEST_CASE("closed-form bounds")
{
    auto b = chk_upper_bounds(MultipartiteSpec{{2, 2}}, 1);
    CHECK(b.general.value == doctest::Approx(948.0 * 2 * (1 + std::log(2.0))));
    CHECK(b.general.value == doctest::Approx(3210.2).epsilon(1e-4));
    CHECK(b.general.ceiling == 3211);
    CHECK(b.power_of_two.applicable);
    CHECK(b.few_parts.applicable);
    auto odd = chk_upper_bounds(MultipartiteSpec{{2, 2, 2}}, 1);
    CHECK_FALSE(odd.power_of_two.applicable);
    CHECK_FALSE(odd.few_parts.applicable);
    double prev = 0;
    for (int k = 1; k <= 6; ++k) {
        double v = chk_upper_bounds(MultipartiteSpec{{3, 5, 2}}, k).general.value;
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(chk_upper_bound_graph(5, 5, 2).value == doctest::Approx(948.0 * 5 * (2 + std::log(2.0))));
    CHECK_THROWS_AS(chk_upper_bounds(MultipartiteSpec{{1, 2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(chk_upper_bound_graph(3, 2, 1), std::invalid_argument);
}

}  // TEST_SUITE
