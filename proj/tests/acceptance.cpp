// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "abchoose/coloring.hpp"
#include "abchoose/gadgets.hpp"
#include "abchoose/generators.hpp"
#include "abchoose/json_io.hpp"
#include "abchoose/kernel.hpp"
#include "abchoose/oracle.hpp"
#include "abchoose/probabilistic.hpp"
#include "abchoose/set_partition.hpp"
#include "abchoose/strong.hpp"
#include "abchoose/structure.hpp"
#include "support.hpp"

using namespace abch;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// ------------------------------------------------------------------ 1

Outcome classifier_agrees_with_oracle()
{
    auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, Graph>> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : ref::connected_graphs(n)) graphs.push_back({"n=" + std::to_string(n) + " " + emit_graph(g), g});
    graphs.push_back({"C6", cycle_graph(6)});
    graphs.push_back({"theta(2,2,2)", theta_graph(2, 2, 2)});
    graphs.push_back({"theta(2,2,4)", theta_graph(2, 2, 4)});
    graphs.push_back({"K3,3", complete_multipartite({3, 3})});
    int small = static_cast<int>(graphs.size()) - 4;
    for (const auto& [name, g] : graphs) {
        auto c = classify_two_choosable(g);
        auto v = is_ab_choosable(g, 2, 1);
        if (v.verdict == Verdict::Inconclusive) return fail(name + ": oracle inconclusive");
        if (c.choosable != (v.verdict == Verdict::Yes)) return fail(name + ": classifier and oracle disagree");
    }
    if (std::chrono::steady_clock::now() - start > std::chrono::minutes(5)) return fail("took longer than 5 minutes");
    return {true, std::to_string(small) + " connected graphs on <= 5 vertices plus C6, theta(2,2,2), theta(2,2,4), K3,3; 0 disagreements"};
}

// ------------------------------------------------------------------ 2

Outcome kernel_choice_fuzz()
{
    ref::Rng rng(2024);
    std::uint64_t runs = 0;
    auto run = [&](const Digraph& d, int k, int count) -> std::optional<std::string> {
        std::vector<int> sizes;
        for (Vertex v = 0; v < d.num_vertices(); ++v) sizes.push_back(k * (d.out_degree(v) + 1));
        const int palette = *std::max_element(sizes.begin(), sizes.end()) + 2 * k;
        const Graph g = d.underlying();
        for (int i = 0; i < count; ++i) {
            auto lists = ref::random_lists(rng, sizes, palette);
            auto r = kernel_list_choice(d, lists, k);
            ++runs;
            if (!ref::choice_ok(g, lists, r.choice, k)) return "invalid choice";
            if (r.iterations > static_cast<std::size_t>(k * d.num_vertices())) return "iteration bound exceeded";
        }
        return std::nullopt;
    };
    for (int n : {4, 6}) {
        Digraph d(n);
        for (Vertex v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
        for (int k = 1; k <= 3; ++k)
            if (auto e = run(d, k, 10'000)) return fail("directed C" + std::to_string(n) + ", k=" + std::to_string(k) + ": " + *e);
    }
    std::uniform_int_distribution<int> size(4, 12);
    for (int i = 0; i < 50; ++i) {
        Graph g = ref::random_graph(rng, size(rng), 0.35);
        Digraph d = degeneracy(g).orientation;
        for (int k = 1; k <= 3; ++k)
            if (auto e = run(d, k, 267)) return fail("random graph " + std::to_string(i) + ": " + *e);
    }
    return {runs >= 100'000, std::to_string(runs) + " runs, all choices valid, iterations <= k*n"};
}

// ------------------------------------------------------------------ 3

Outcome even_cycle_certificates()
{
    for (int n : {4, 6}) {
        auto v = is_ab_choosable(cycle_graph(n), 2, 1);
        if (v.verdict != Verdict::Yes) return fail("C" + std::to_string(n) + " not certified (2:1)-choosable");
    }
    auto c6 = is_ab_choosable(cycle_graph(6), 2, 1);
    std::string detail = "C4, C6 yes (C6: " + std::to_string(c6.assignments) + " canonical assignments); ";
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"C5", cycle_graph(5)}, {"K3,3", complete_multipartite({3, 3})}}) {
        auto v = is_ab_choosable(g, 2, 1);
        if (v.verdict != Verdict::No || !v.witness) return fail(name + " not refuted");
        if (ref::has_list_multicoloring(g, v.witness->sets(), 1)) return fail(name + " witness is colourable");
        detail += name + " ";
    }
    return {true, detail + "refuted with re-verified witnesses"};
}

// ------------------------------------------------------------------ 4

Outcome chordal_route_certificates()
{
    ref::Rng rng(77);
    std::uniform_int_distribution<int> size(3, 10);
    for (int i = 0; i < 20; ++i) {
        Graph g = ref::random_chordal(rng, size(rng));
        const auto clique = maximum_clique(g);
        const int w = static_cast<int>(clique.size());
        for (int k = 1; k <= 2; ++k) {
            auto lists = ref::random_lists(rng, std::vector<int>(static_cast<std::size_t>(g.num_vertices()), k * w), k * w + 4);
            auto c = choice_via_orientation(g, OrientationRoute::Chordal, lists, k);
            if (!ref::choice_ok(g, lists, c, k)) return fail("graph " + std::to_string(i) + ": invalid chordal-route choice");
            // Adversary on at most 6 vertices containing a maximum clique: every list equal to 1..kw-1.
            std::vector<Vertex> sub = clique;
            for (Vertex v = 0; v < g.num_vertices() && sub.size() < 6; ++v)
                if (std::find(sub.begin(), sub.end(), v) == sub.end()) sub.push_back(v);
            std::sort(sub.begin(), sub.end());
            Graph h = g.induced(sub);
            auto r = find_list_coloring(h, uniform_lists(h.num_vertices(), k * w - 1), k);
            if (r.status != SearchStatus::None)
                return fail("graph " + std::to_string(i) + ", k=" + std::to_string(k) + ": adversary lists not refuted");
        }
    }
    return {true, "20 chordal graphs, k in {1,2}: (kw:k) choices valid, (kw-1:k) adversaries refuted"};
}

// ------------------------------------------------------------------ 5

Outcome lower_bound_instances()
{
    std::string detail;
    for (int d : {2, 3}) {
        auto start = std::chrono::steady_clock::now();
        auto inst = schi_lower_bound_graph(d);
        if (inst.graph.max_degree() != d) return fail("d=" + std::to_string(d) + ": max degree is " + std::to_string(inst.graph.max_degree()));
        Graph h = append_cliques(inst.graph, inst.blocks);
        if (k_coloring(h, 2 * d - 1)) return fail("d=" + std::to_string(d) + ": appended graph is colourable");
        if (ref::is_k_colorable(h, 2 * d - 1)) return fail("d=" + std::to_string(d) + ": reference colours the appended graph");
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > 60) return fail("d=" + std::to_string(d) + " took " + std::to_string(secs) + " s");
        detail += "d=" + std::to_string(d) + ": " + std::to_string(inst.graph.num_vertices()) + " vertices, not " +
                  std::to_string(2 * d - 1) + "-colourable; ";
    }
    return {true, detail + "max degree exact"};
}

// ------------------------------------------------------------------ 6

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return (h ^ v) * 1099511628211ULL; }

std::uint64_t hash_sets(std::uint64_t h, const std::vector<std::vector<int>>& sets)
{
    for (const auto& s : sets) {
        h = mix(h, s.size());
        for (int x : s) h = mix(h, static_cast<std::uint64_t>(x));
    }
    return h;
}

std::pair<std::uint64_t, std::string> set_partition_pass(std::uint64_t seed, std::uint64_t& count)
{
    ref::Rng rng(seed);
    std::uint64_t h = 1469598103934665603ULL;
    auto family = [&](int size) {
        std::uniform_int_distribution<int> uni(size, std::min(32, 2 * size + 4));
        std::vector<int> all(static_cast<std::size_t>(uni(rng)));
        std::iota(all.begin(), all.end(), 1);
        SetFamily fam;
        for (int i = 0; i < size; ++i) {
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> s(all.begin(), all.begin() + size);
            std::sort(s.begin(), s.end());
            fam.push_back(s);
        }
        return fam;
    };
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
            for (int i = 0; i < 10'000; ++i) {
                SetFamily fam = family(k + l);
                auto r = split_family(fam, k, l);
                if (auto bad = split_violation(fam, k, l, r)) return {0, "split k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " + *bad};
                h = hash_sets(hash_sets(h, {r.first, r.second}), r.chosen);
                ++count;
            }
    for (int k = 1; k <= 4; ++k)
        for (int m = 1; m <= 4; ++m)
            for (int i = 0; i < 10'000; ++i) {
                SetFamily fam = family(k * m);
                auto p = partition_family(fam, k, m);
                if (auto bad = partition_violation(fam, k, m, p)) return {0, "partition k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + *bad};
                h = hash_sets(hash_sets(h, p.groups), p.chosen);
                ++count;
            }
    return {h, ""};
}

Outcome set_partition_suite()
{
    std::uint64_t count = 0, again = 0;
    auto [h1, e1] = set_partition_pass(6, count);
    if (!e1.empty()) return fail(e1);
    auto [h2, e2] = set_partition_pass(6, again);
    if (!e2.empty()) return fail(e2);
    if (h1 != h2) return fail("second run produced different output");
    std::ostringstream os;
    os << count << " families (10^4 per (k,l) and per (k,m), k,l,m <= 4); invariants hold; run hash " << std::hex << h1
       << " reproduced";
    return {true, os.str()};
}

// ------------------------------------------------------------------ 7

Outcome halving_pipeline()
{
    Graph c4 = cycle_graph(4);
    ref::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        auto lists = ref::random_lists(rng, {2, 2, 2, 2}, 5);
        auto r = halve_choice(c4, lists, 1, 3);
        if (r.status != SearchStatus::Found) return fail("instance " + std::to_string(i) + ": no colouring");
        if (!ref::proper(c4, r.coloring)) return fail("instance " + std::to_string(i) + ": improper colouring");
        for (Vertex v = 0; v < 4; ++v)
            if (std::find(lists[v].begin(), lists[v].end(), r.coloring[static_cast<std::size_t>(v)]) == lists[v].end())
                return fail("instance " + std::to_string(i) + ": colour outside the list");
    }
    Graph k33 = complete_multipartite({3, 3});
    ListAssignment bad(std::vector<std::vector<Color>>{{1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (int k : {1, 3}) {
        auto r = halve_choice(k33, bad, 1, k);
        if (r.status != SearchStatus::None) return fail(std::string("K3,3 bad lists, k=") + std::to_string(k) + ": " + to_string(r.status));
    }
    return {true, "C4 with 2-lists (m=1, k=3): 100/100 proper colourings; K3,3 bad lists: failure for k=1 and k=3"};
}

// ------------------------------------------------------------------ 8

Outcome binomial_tail()
{
    std::ostringstream os;
    os.precision(4);
    for (auto [n, p, k] : std::vector<std::tuple<int, double, double>>{{100, 0.3, 15}, {100, 0.3, 20}, {100, 0.5, 30}}) {
        const double bound = chernoff_bound(n, p, k);
        auto est = binomial_tail_estimate(n, p, k, 1'000'000, 31);
        if (est.estimate > bound + 3 * est.sigma) return fail("(" + std::to_string(p) + ", " + std::to_string(k) + ") exceeds the bound");
        os << "(" << n << "," << p << "," << k << "): " << est.estimate << " <= " << bound << "; ";
    }
    return {true, os.str() + "10^6 samples each"};
}

// ------------------------------------------------------------------ 9

Outcome gadget_structure()
{
    ref::Rng rng(9);
    auto bipartite_ok = [](const GadgetOutput& o) {
        if (static_cast<int>(o.side.size()) != o.graph.num_vertices()) return false;
        for (const Edge& e : o.graph.edges())
            if (o.side[static_cast<std::size_t>(e.u)] == o.side[static_cast<std::size_t>(e.v)]) return false;
        return true;
    };
    std::uniform_int_distribution<int> part(1, 3);
    for (int i = 0; i < 50; ++i) {
        Graph g = ref::random_bipartite(rng, part(rng), part(rng), 0.5);
        const int n = g.num_vertices();
        std::vector<int> f;
        std::uniform_int_distribution<int> two_three(2, 3);
        for (int v = 0; v < n; ++v) f.push_back(two_three(rng));
        std::uniform_int_distribution<int> kk(1, 3);
        const int k = kk(rng);
        if (amplifier(g).graph.num_vertices() != n * (n + 1) + 1) return fail("amplifier vertex count");
        auto h = bg23_to_bg3(g, f);
        if (h.graph.num_vertices() != 9 * n + 2 || !bipartite_ok(h)) return fail("bg23 count or sides");
        auto w = lift_k(g, k);
        if (w.graph.num_vertices() != (k + 1) * (k + 1) * n + 2 || !bipartite_ok(w)) return fail("lift count or sides");
    }
    std::string detail = "50 random bipartite inputs: counts and side certificates hold";
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K1", path_graph(1)}, {"K2", complete_graph(2)}}) {
        auto base = choice_number(g, 1);
        auto amp = choice_number(amplifier(g).graph, 1);
        if (base.verdict != Verdict::Yes || amp.verdict != Verdict::Yes) return fail(name + ": choice number undecided");
        if (amp.value != base.value + 1) return fail(name + ": amplifier choice number " + std::to_string(amp.value));
        detail += "; ch(H'(" + name + ")) = " + std::to_string(amp.value) + " = ch(" + name + ")+1";
    }
    return {true, detail};
}

// ------------------------------------------------------------------ 10

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& dir, const std::string& args)
{
    const std::string cmd = "cd '" + dir + "' && '" ABCHOOSE_CLI "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int expected_code(const std::string& status)
{
    if (status == "yes" || status == "constructed" || status == "found") return 0;
    if (status == "no" || status == "none") return 1;
    return 2;
}

Outcome golden_matrix()
{
    const std::filesystem::path dir = ABCHOOSE_GOLDEN_DIR;
    std::vector<std::filesystem::path> cmds;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".cmd") cmds.push_back(e.path());
    std::sort(cmds.begin(), cmds.end());
    if (cmds.size() != 12) return fail("expected 12 scenarios, found " + std::to_string(cmds.size()));
    for (const auto& c : cmds) {
        std::string args = slurp(c);
        while (!args.empty() && (args.back() == '\n' || args.back() == '\r')) args.pop_back();
        const std::string name = c.stem().string();
        auto a = run_cli(dir.string(), args);
        auto b = run_cli(dir.string(), args);
        std::filesystem::path out = c, code = c;
        out.replace_extension(".out");
        code.replace_extension(".code");
        if (a.out != slurp(out)) return fail(name + ": output differs from the golden file");
        if (a.out != b.out || a.code != b.code) return fail(name + ": repeated run differs");
        if (std::to_string(a.code) + "\n" != slurp(code)) return fail(name + ": exit code " + std::to_string(a.code));
        auto payload = nlohmann::json::parse(a.out, nullptr, false);
        if (payload.is_discarded() || !payload.contains("status")) return fail(name + ": payload has no status");
        if (expected_code(payload["status"].get<std::string>()) != a.code)
            return fail(name + ": exit code does not match status " + payload["status"].get<std::string>());
    }
    return {true, "12 scenarios byte-identical, exit codes match payload status"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"two-choosability classifier vs exhaustive oracle", classifier_agrees_with_oracle},
        {"kernel list choice validity fuzz", kernel_choice_fuzz},
        {"even cycles (2:1)-choosable, C5 and K3,3 refuted", even_cycle_certificates},
        {"chordal route and clique adversary", chordal_route_certificates},
        {"strong lower-bound instances", lower_bound_instances},
        {"set-family split and partition suite", set_partition_suite},
        {"halving pipeline", halving_pipeline},
        {"binomial tail Monte-Carlo", binomial_tail},
        {"gadget structure and amplifier increment", gadget_structure},
        {"CLI golden matrix", golden_matrix},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char time[32];
        std::snprintf(time, sizeof time, "%.1f s", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail << " ["
                  << time << "]" << std::endl;
        failed += !o.pass;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
