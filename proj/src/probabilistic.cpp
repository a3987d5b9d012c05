#include "abchoose/probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "abchoose/generators.hpp"

namespace abch {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::vector<Color> palette_of(const ListAssignment& lists)
{
    std::vector<Color> p;
    for (const auto& s : lists.sets()) p.insert(p.end(), s.begin(), s.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

// Per-trial outcome: assign each palette colour to a class, then keep the lowest k matching colours.
struct TrialSetup {
    const ListAssignment& lists;
    std::vector<Color> palette;
    std::vector<int> class_of;  // per vertex
    int k;
    std::function<std::vector<int>(std::mt19937_64&)> draw;  // class per palette index

    std::optional<Choice> attempt(std::uint64_t seed) const
    {
        std::mt19937_64 rng(seed);
        const std::vector<int> f = draw(rng);
        std::vector<std::vector<Color>> picks(at(lists.size()));
        for (Vertex v = 0; v < lists.size(); ++v) {
            for (Color c : lists[v]) {
                auto i = std::lower_bound(palette.begin(), palette.end(), c) - palette.begin();
                if (f[static_cast<std::size_t>(i)] == class_of[at(v)]) picks[at(v)].push_back(c);
                if (static_cast<int>(picks[at(v)].size()) == k) break;
            }
            if (static_cast<int>(picks[at(v)].size()) < k) return std::nullopt;
        }
        return Choice(std::move(picks));
    }
};

TrialReport run_trials(const Graph& g, const TrialSetup& setup, std::uint64_t seed, std::uint64_t max_trials, int jobs)
{
    if (max_trials == 0) throw std::invalid_argument("randomised choice: max_trials must be positive");
    TrialReport rep;
    rep.seed = seed;
    rep.trials = max_trials;
    std::vector<char> ok(max_trials, 0);
    auto worker = [&](std::uint64_t start, std::uint64_t step) {
        for (std::uint64_t i = start; i < max_trials; i += step) ok[i] = setup.attempt(trial_seed(seed, i)).has_value();
    };
    const auto threads = static_cast<std::uint64_t>(std::max(1, jobs));
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < threads; ++w) pool.emplace_back(worker, w, threads);
        for (auto& t : pool) t.join();
    }
    rep.successes = static_cast<std::uint64_t>(std::count(ok.begin(), ok.end(), 1));
    auto first = std::find(ok.begin(), ok.end(), 1);
    if (first != ok.end()) {
        rep.first_success = static_cast<std::uint64_t>(first - ok.begin());
        rep.choice = setup.attempt(trial_seed(seed, *rep.first_success));
        if (auto bad = choice_violation(g, setup.lists, *rep.choice, setup.k))
            throw std::logic_error("randomised choice: invalid result: " + *bad);
    }
    return rep;
}

void require_lists(const ListAssignment& lists, int n, int k, const char* who)
{
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be at least 1");
    if (lists.size() != n) throw std::invalid_argument(std::string(who) + ": list assignment does not match the graph");
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(lists[v].size()) < k)
            throw std::invalid_argument(std::string(who) + ": list of vertex " + std::to_string(v) +
                                        " has fewer than k colours");
}

Bound make_bound(double value, bool applicable = true)
{
    return {value, static_cast<std::int64_t>(std::ceil(value)), applicable};
}

}  // namespace

double chernoff_bound(int n, double p, double k)
{
    if (n < 1) throw std::invalid_argument("chernoff_bound: n must be at least 1");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("chernoff_bound: p must lie in (0, 1]");
    const double mean = p * n;
    if (!(k < mean)) throw std::invalid_argument("chernoff_bound: k must be below pn");
    return std::exp(-(mean - k) * (mean - k) / (2.0 * mean));
}

TailEstimate binomial_tail_estimate(int n, double p, double k, std::uint64_t samples, std::uint64_t seed)
{
    if (samples == 0) throw std::invalid_argument("binomial_tail_estimate: samples must be positive");
    const double bound = chernoff_bound(n, p, k);
    std::mt19937_64 rng(seed);
    std::binomial_distribution<int> dist(n, p);
    std::uint64_t below = 0;
    for (std::uint64_t i = 0; i < samples; ++i) below += dist(rng) < k;
    TailEstimate out;
    out.samples = samples;
    out.estimate = static_cast<double>(below) / static_cast<double>(samples);
    out.sigma = std::sqrt(bound * (1.0 - bound) / static_cast<double>(samples));
    return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    // splitmix64 finaliser over the pair.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

TrialReport random_partition_choice(const Graph& g, const std::vector<std::vector<Vertex>>& classes, int k,
                                    const ListAssignment& lists, std::uint64_t seed, std::uint64_t max_trials,
                                    int jobs)
{
    const int n = g.num_vertices();
    require_lists(lists, n, k, "random_partition_choice");
    std::vector<int> class_of(at(n), -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i]) {
            if (v < 0 || v >= n || class_of[at(v)] != -1)
                throw std::invalid_argument("random_partition_choice: classes must partition the vertices");
            class_of[at(v)] = static_cast<int>(i);
        }
    if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end())
        throw std::invalid_argument("random_partition_choice: classes must partition the vertices");
    for (const Edge& e : g.edges())
        if (class_of[at(e.u)] == class_of[at(e.v)])
            throw std::invalid_argument("random_partition_choice: class " + std::to_string(class_of[at(e.u)]) +
                                        " is not independent (edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v) + ")");

    TrialSetup setup{lists, palette_of(lists), class_of, k, {}};
    const int r = static_cast<int>(classes.size());
    const std::size_t colours = setup.palette.size();
    setup.draw = [r, colours](std::mt19937_64& rng) {
        std::uniform_int_distribution<int> pick(0, std::max(r, 1) - 1);
        std::vector<int> f(colours);
        for (auto& x : f) x = pick(rng);
        return f;
    };
    return run_trials(g, setup, seed, max_trials, jobs);
}

double MultipartiteSpec::t() const
{
    if (parts.empty()) return 0;
    return static_cast<double>(std::accumulate(parts.begin(), parts.end(), 0)) / static_cast<double>(parts.size());
}

std::vector<int> MultipartiteSpec::part_of_vertex() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < parts.size(); ++i) out.insert(out.end(), at(parts[i]), static_cast<int>(i));
    return out;
}

TrialReport multipartite_random_choice(const MultipartiteSpec& spec, int k, const ListAssignment& lists,
                                       std::uint64_t seed, std::uint64_t max_trials, int jobs)
{
    if (spec.parts.empty()) throw std::invalid_argument("multipartite_random_choice: need at least one part");
    for (int m : spec.parts)
        if (m < 1) throw std::invalid_argument("multipartite_random_choice: parts must be nonempty");
    Graph g = complete_multipartite(spec.parts);
    require_lists(lists, g.num_vertices(), k, "multipartite_random_choice");

    std::vector<int> sizes = spec.parts;
    std::size_t padded = 1;
    while (padded < sizes.size()) padded *= 2;
    sizes.resize(padded, 2);

    TrialSetup setup{lists, palette_of(lists), spec.part_of_vertex(), k, {}};
    const std::size_t colours = setup.palette.size();
    setup.draw = [sizes, colours, k](std::mt19937_64& rng) {
        std::vector<int> f(colours, -1);
        std::vector<int> all(colours);
        std::iota(all.begin(), all.end(), 0);
        auto mean = [&](int lo, int hi) {
            double s = 0;
            for (int i = lo; i < hi; ++i) s += sizes[at(i)];
            return s / (hi - lo);
        };
        auto split = [&](auto&& self, int lo, int hi, const std::vector<int>& mine) -> void {
            const int r = hi - lo;
            if (r <= mean(lo, hi)) {
                std::uniform_int_distribution<int> pick(lo, hi - 1);
                for (int c : mine) f[at(c)] = pick(rng);
                return;
            }
            const int mid = lo + r / 2;
            const double t1 = mean(lo, mid), t2 = mean(mid, hi);
            std::bernoulli_distribution first((k + std::log(t1)) / (2.0 * k + std::log(t1 * t2)));
            std::vector<int> left, right;
            for (int c : mine) (first(rng) ? left : right).push_back(c);
            self(self, lo, mid, left);
            self(self, mid, hi, right);
        };
        split(split, 0, static_cast<int>(sizes.size()), all);
        return f;
    };
    return run_trials(g, setup, seed, max_trials, jobs);
}

MultipartiteBounds chk_upper_bounds(const MultipartiteSpec& spec, int k)
{
    if (k < 1) throw std::invalid_argument("chk_upper_bounds: k must be at least 1");
    if (spec.parts.empty()) throw std::invalid_argument("chk_upper_bounds: need at least one part");
    for (std::size_t i = 0; i < spec.parts.size(); ++i)
        if (spec.parts[i] < 2)
            throw std::invalid_argument("chk_upper_bounds: part " + std::to_string(i) + " has fewer than 2 vertices");
    MultipartiteBounds b;
    b.r = spec.r();
    b.t = spec.t();
    const double base = b.r * (k + std::log(b.t));
    const bool power = (b.r & (b.r - 1)) == 0;
    b.general = make_bound(948.0 * base);
    b.power_of_two = make_bound(474.0 * base, power);
    b.few_parts = make_bound(4.0 * base, b.r <= b.t);
    return b;
}

Bound chk_upper_bound_graph(int chromatic, int vertices, int k)
{
    if (k < 1) throw std::invalid_argument("chk_upper_bound_graph: k must be at least 1");
    if (chromatic < 1 || vertices < chromatic)
        throw std::invalid_argument("chk_upper_bound_graph: need 1 <= chromatic number <= |V|");
    return make_bound(948.0 * chromatic * (k + std::log(static_cast<double>(vertices) / chromatic + 1.0)));
}

}  // namespace abch
