// Command-line front end. Every command writes one JSON document.
// Exit status: 0 decided yes / constructed, 1 decided no (witness in the
// payload), 2 inconclusive or bad input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

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

namespace {

using namespace abch;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUndecided = 2;

struct Options {
    std::string input = "-";
    bool dimacs = false;
    std::string output = "-";
    std::string dot;
    bool pretty = false;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
};

struct Outcome {
    int code = kExitYes;
    Json payload;
    std::string dot;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + path);
        out << text;
        if (!out.flush()) throw InputError("cannot write " + path);
    }
    std::filesystem::rename(tmp, path);
}

// A graph document may also be wrapped as {"graph": {...}} (output of gen).
const Json& unwrap(const Json& j, const char* key)
{
    if (j.is_object() && j.contains(key)) return j.at(key);
    return j;
}

Graph load_graph(const Options& o)
{
    const std::string text = read_text(o.input);
    if (o.dimacs) return parse_dimacs(text);
    return graph_from_json(unwrap(parse_json(text), "graph"));
}

Digraph load_digraph(const std::string& path) { return digraph_from_json(unwrap(parse_json(read_text(path)), "digraph")); }

ListAssignment load_lists(const std::string& path, int n)
{
    if (path.empty()) throw InputError("--lists is required");
    return lists_from_json(parse_json(read_text(path)), n);
}

std::vector<int> parse_ints(const std::string& text, const char* what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(std::string(what) + ": \"" + item + "\" is not an integer");
        }
    }
    return out;
}

Json coloring_json(const std::vector<Color>& c) { return Json(c); }

Json verdict_json(const char* status) { return Json{{"status", status}}; }

int exit_for(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return kExitYes;
    case Verdict::No: return kExitNo;
    case Verdict::Inconclusive: return kExitUndecided;
    }
    return kExitUndecided;
}

std::uint64_t budget_of(const Options& o)
{
    std::uint64_t b = o.budget.value_or(default_budget());
    if (b == 0) throw InputError("--budget must be positive");
    return b;
}

std::uint64_t require_seed(const Options& o)
{
    if (!o.seed) throw InputError("randomised commands need an explicit --seed");
    return *o.seed;
}

// ------------------------------------------------------------------ gen

struct GenArgs {
    std::string family;
    std::string gadget;
    int schi_lb = 0;
    int copies = -1;
    std::string f;
    int k = 0;
};

Outcome cmd_gen(const Options& o, const GenArgs& a)
{
    const int chosen = !a.family.empty() + !a.gadget.empty() + (a.schi_lb != 0);
    if (chosen != 1) throw InputError("gen needs exactly one of --family, --gadget, --schi-lb");
    Outcome out;
    out.payload = verdict_json("constructed");
    if (!a.family.empty()) {
        FamilySpec spec = parse_family_spec(a.family);
        Graph g = generate(spec);
        out.payload["family"] = to_string(spec);
        out.payload["graph"] = graph_to_json(g);
        out.dot = to_dot(g);
        return out;
    }
    if (a.schi_lb != 0) {
        auto inst = schi_lower_bound_graph(a.schi_lb);
        out.payload["d"] = inst.d;
        out.payload["graph"] = graph_to_json(inst.graph);
        out.payload["blocks"] = inst.blocks;
        Json sizes = Json::object();
        for (std::size_t i = 0; i < inst.class_sizes.size(); ++i) sizes[kLowerBoundClassNames[i]] = inst.class_sizes[i];
        out.payload["class_sizes"] = sizes;
        out.dot = to_dot(inst.graph);
        return out;
    }
    const Graph base = load_graph(o);
    GadgetOutput gadget;
    if (a.gadget == "cone") {
        gadget = cone(base);
    } else if (a.gadget == "amplifier") {
        gadget = amplifier(base, a.copies);
    } else if (a.gadget == "bg23") {
        if (a.f.empty()) throw InputError("--gadget bg23 needs --f");
        gadget = bg23_to_bg3(base, parse_ints(a.f, "--f"));
    } else if (a.gadget == "lift") {
        if (a.k < 1) throw InputError("--gadget lift needs --k >= 1");
        gadget = lift_k(base, a.k);
    } else {
        throw InputError("unknown gadget \"" + a.gadget + "\" (cone, amplifier, bg23, lift)");
    }
    out.payload["gadget"] = a.gadget;
    out.payload["copies"] = gadget.copies;
    out.payload["graph"] = gadget_to_json(gadget);
    std::vector<std::string> labels;
    for (const auto& l : gadget.labels) labels.push_back(l.to_string());
    out.dot = to_dot(gadget.graph, labels);
    return out;
}

// ------------------------------------------------------ structure commands

Outcome cmd_core(const Options& o)
{
    const Graph g = load_graph(o);
    auto core = core_of(g);
    Outcome out;
    out.payload = verdict_json("constructed");
    out.payload["core"] = graph_to_json(core.core);
    out.payload["vertices"] = core.vertices;
    out.dot = to_dot(core.core);
    return out;
}

Outcome cmd_classify2(const Options& o)
{
    const Graph g = load_graph(o);
    auto rep = classify_two_choosable(g);
    Outcome out;
    out.code = rep.choosable ? kExitYes : kExitNo;
    out.payload = verdict_json(rep.choosable ? "yes" : "no");
    out.payload["shape"] = to_string(rep.shape);
    out.payload["certificate"] = rep.certificate;
    out.payload["core_vertices"] = rep.core.vertices;
    out.dot = to_dot(g);
    return out;
}

Outcome cmd_kernel(const Options& o)
{
    const Digraph d = load_digraph(o.input);
    Outcome out;
    out.dot = to_dot(d);
    try {
        auto k = find_kernel(d);
        out.payload = verdict_json("yes");
        out.payload["kernel"] = k;
    } catch (const OddDirectedCycleError& e) {
        out.code = kExitNo;
        out.payload = verdict_json("no");
        out.payload["odd_cycle"] = e.cycle();
    }
    return out;
}

// ------------------------------------------------------------------ choose

struct ChooseArgs {
    std::string route = "degeneracy";
    std::string lists;
    std::string orientation;
    int k = 1;
};

Outcome cmd_choose(const Options& o, const ChooseArgs& a)
{
    const Graph g = load_graph(o);
    const ListAssignment lists = load_lists(a.lists, g.num_vertices());
    Outcome out;
    out.payload = verdict_json("constructed");
    out.payload["route"] = a.route;
    Choice choice;
    if (a.route == "degree") {
        choice = degree_choice(g, lists, a.k);
    } else if (a.route == "orientation") {
        if (a.orientation.empty()) throw InputError("--route orientation needs --orientation");
        const Digraph d = load_digraph(a.orientation);
        out.payload["bound"] = d.max_out_degree();
        choice = choice_via_orientation(g, d, lists, a.k);
    } else {
        OrientationRoute route;
        if (a.route == "degeneracy") route = OrientationRoute::Degeneracy;
        else if (a.route == "chordal") route = OrientationRoute::Chordal;
        else if (a.route == "bipartite-density") route = OrientationRoute::BipartiteDensity;
        else throw InputError("unknown route \"" + a.route + "\"");
        out.payload["bound"] = route_orientation(g, route).bound;
        choice = choice_via_orientation(g, route, lists, a.k);
    }
    out.payload["k"] = a.k;
    out.payload["choice"] = color_sets_to_json(choice.sets());
    std::vector<std::string> labels;
    for (const auto& s : choice.sets()) labels.push_back(Json(s).dump());
    out.dot = to_dot(g, labels);
    return out;
}

// ------------------------------------------------------------------ oracle

struct OracleArgs {
    int a = 0;
    int b = 1;
    std::string f;
    std::string lists;
    std::string witness;
    bool no_prune = false;
};

Outcome cmd_oracle(const Options& o, const OracleArgs& a)
{
    const Graph g = load_graph(o);
    Outcome out;
    if (!a.lists.empty()) {
        auto r = find_list_coloring(g, load_lists(a.lists, g.num_vertices()), a.b, budget_of(o));
        out.code = r.status == SearchStatus::Found ? kExitYes : r.status == SearchStatus::None ? kExitNo : kExitUndecided;
        out.payload = verdict_json(to_string(r.status));
        out.payload["b"] = a.b;
        out.payload["nodes"] = r.nodes;
        if (r.choice) out.payload["choice"] = color_sets_to_json(r.choice->sets());
        return out;
    }
    OracleOptions opt;
    opt.budget = budget_of(o);
    opt.jobs = o.jobs;
    opt.prune_closers = !a.no_prune;
    ChoosabilityVerdict v;
    if (!a.f.empty()) {
        v = is_f_choosable(g, parse_ints(a.f, "--f"), opt);
    } else {
        if (a.a < 1) throw InputError("oracle needs --a (or --f, or --lists)");
        v = is_ab_choosable(g, a.a, a.b, opt);
    }
    out.code = exit_for(v.verdict);
    out.payload = verdict_json(to_string(v.verdict));
    if (a.f.empty()) {
        out.payload["a"] = a.a;
        out.payload["b"] = a.b;
    } else {
        out.payload["f"] = parse_ints(a.f, "--f");
    }
    out.payload["assignments"] = v.assignments;
    out.payload["budget"] = v.budget;
    out.payload["peeled"] = v.peeled;
    if (!v.note.empty()) out.payload["note"] = v.note;
    if (v.witness) {
        out.payload["witness"] = lists_to_json(*v.witness);
        if (!a.witness.empty()) {
            Json w = lists_to_json(*v.witness);
            w["verdict"] = "no";
            w["assignments"] = v.assignments;
            w["budget"] = v.budget;
            write_atomic(a.witness, w.dump() + "\n");
        }
    }
    out.dot = to_dot(g);
    return out;
}

// ------------------------------------------------------------------- halve

struct HalveArgs {
    std::string lists;
    int m = 1;
    int k = 1;
};

Outcome cmd_halve(const Options& o, const HalveArgs& a)
{
    const Graph g = load_graph(o);
    auto r = halve_choice(g, load_lists(a.lists, g.num_vertices()), a.m, a.k, budget_of(o));
    Outcome out;
    out.payload = verdict_json(r.status == SearchStatus::Found ? "constructed" : to_string(r.status));
    out.payload["m"] = a.m;
    out.payload["k"] = a.k;
    if (r.status == SearchStatus::Found) {
        out.payload["coloring"] = coloring_json(r.coloring);
        out.payload["blown_choice"] = color_sets_to_json(r.blown_choice->sets());
        std::vector<std::string> labels;
        for (Color c : r.coloring) labels.push_back(std::to_string(c));
        out.dot = to_dot(g, labels);
    } else {
        out.code = r.status == SearchStatus::None ? kExitNo : kExitUndecided;
        out.payload["blown_lists"] = color_sets_to_json(r.blown_lists.sets());
        out.dot = to_dot(g);
    }
    return out;
}

// ------------------------------------------------------- split / partition

struct FamilyArgs {
    std::string family;
    int k = 1;
    int l = 1;
    int m = 1;
};

Outcome cmd_split(const Options&, const FamilyArgs& a)
{
    if (a.family.empty()) throw InputError("--family is required");
    auto fam = family_from_json(parse_json(read_text(a.family)));
    auto r = split_family(fam, a.k, a.l);
    Outcome out;
    out.payload = verdict_json("constructed");
    out.payload["first"] = r.first;
    out.payload["second"] = r.second;
    out.payload["chosen"] = r.chosen;
    return out;
}

Outcome cmd_partition(const Options&, const FamilyArgs& a)
{
    if (a.family.empty()) throw InputError("--family is required");
    auto fam = family_from_json(parse_json(read_text(a.family)));
    auto p = partition_family(fam, a.k, a.m);
    Outcome out;
    out.payload = verdict_json("constructed");
    out.payload["groups"] = p.groups;
    out.payload["chosen"] = p.chosen;
    return out;
}

// ------------------------------------------------------------------ strong

struct StrongArgs {
    std::string mode = "check";
    int k = 2;
    int m = 1;
    std::string blocks;
    std::string lists;
};

Outcome cmd_strong(const Options& o, const StrongArgs& a)
{
    const Graph g = load_graph(o);
    Outcome out;
    if (a.mode == "check") {
        auto r = is_strongly_k_colorable(g, a.k, budget_of(o));
        out.code = exit_for(r.verdict);
        out.payload = verdict_json(to_string(r.verdict));
        out.payload["k"] = a.k;
        out.payload["partitions"] = r.partitions;
        if (r.witness) {
            out.payload["witness"] = blocks_to_json(*r.witness, a.k);
            out.dot = to_dot(append_cliques(g, *r.witness));
        } else {
            out.dot = to_dot(g);
        }
        return out;
    }
    if (a.blocks.empty()) throw InputError("--mode " + a.mode + " needs --blocks");
    const BlockPartition blocks = blocks_from_json(parse_json(read_text(a.blocks)));
    const Graph appended = append_cliques(g, blocks);
    if (a.mode == "lift") {
        auto r = strong_color_lift(g, blocks, a.k);
        out.payload = verdict_json(r.ok ? "constructed" : "no");
        if (r.ok) {
            out.payload["coloring"] = coloring_json(r.coloring);
            out.payload["transversal"] = r.transversal;
            std::vector<std::string> labels;
            for (Color c : r.coloring) labels.push_back(std::to_string(c));
            out.dot = to_dot(appended, labels);
        } else {
            out.code = kExitNo;
            out.payload["failed_stage"] = r.failed_stage;
            out.dot = to_dot(appended);
        }
        return out;
    }
    if (a.mode == "choose") {
        auto r = strong_choosable_block_choice(g, blocks, load_lists(a.lists, g.num_vertices()), a.k, a.m);
        out.payload = verdict_json(r.ok ? "constructed" : "no");
        out.payload["refined_blocks"] = r.refined_blocks;
        if (r.ok) {
            out.payload["choice"] = color_sets_to_json(r.choice.sets());
        } else {
            out.code = kExitNo;
            out.payload["failure"] = r.failure;
        }
        out.dot = to_dot(appended);
        return out;
    }
    throw InputError("unknown --mode \"" + a.mode + "\" (check, lift, choose)");
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
    std::string parts;
    int chi = 0;
    int vertices = 0;
    int k = 1;
    std::string binomial;
};

Json bound_json(const Bound& b)
{
    return Json{{"value", b.value}, {"ceiling", b.ceiling}, {"applicable", b.applicable}};
}

Outcome cmd_bounds(const Options&, const BoundsArgs& a)
{
    Outcome out;
    out.payload = verdict_json("constructed");
    out.payload["k"] = a.k;
    bool any = false;
    if (!a.parts.empty()) {
        MultipartiteSpec spec{parse_ints(a.parts, "--parts")};
        auto b = chk_upper_bounds(spec, a.k);
        out.payload["parts"] = spec.parts;
        out.payload["r"] = b.r;
        out.payload["t"] = b.t;
        out.payload["general"] = bound_json(b.general);
        out.payload["power_of_two"] = bound_json(b.power_of_two);
        out.payload["few_parts"] = bound_json(b.few_parts);
        any = true;
    }
    if (a.chi > 0) {
        out.payload["chromatic_number"] = a.chi;
        out.payload["vertices"] = a.vertices;
        out.payload["graph_bound"] = bound_json(chk_upper_bound_graph(a.chi, a.vertices, a.k));
        any = true;
    }
    if (!a.binomial.empty()) {
        std::stringstream ss(a.binomial);
        std::string n, p, k;
        if (!std::getline(ss, n, ',') || !std::getline(ss, p, ',') || !std::getline(ss, k, ','))
            throw InputError("--binomial expects n,p,k");
        try {
            out.payload["chernoff"] = chernoff_bound(std::stoi(n), std::stod(p), std::stod(k));
        } catch (const std::invalid_argument& e) {
            if (std::string(e.what()).starts_with("chernoff")) throw;
            throw InputError("--binomial expects numbers n,p,k");
        }
        any = true;
    }
    if (!any) throw InputError("bounds needs --parts, --chi with --vertices, or --binomial");
    return out;
}

// ---------------------------------------------------------------------- mc

struct McArgs {
    std::string mode = "tail";
    int n = 100;
    double p = 0.5;
    double k = 0;
    std::uint64_t samples = 1'000'000;
    std::string lists;
    std::string classes;
    std::string parts;
    int choose_k = 1;
    std::uint64_t trials = 1000;
};

Json trial_json(const TrialReport& r)
{
    Json j{{"seed", r.seed}, {"trials", r.trials}, {"successes", r.successes}, {"failure_rate", r.failure_rate()}};
    if (r.first_success) j["first_success"] = *r.first_success;
    if (r.choice) j["choice"] = color_sets_to_json(r.choice->sets());
    return j;
}

Outcome cmd_mc(const Options& o, const McArgs& a)
{
    const std::uint64_t seed = require_seed(o);
    Outcome out;
    if (a.mode == "tail") {
        const double bound = chernoff_bound(a.n, a.p, a.k);
        auto est = binomial_tail_estimate(a.n, a.p, a.k, a.samples, seed);
        const bool within = est.estimate <= bound + 3 * est.sigma;
        out.code = within ? kExitYes : kExitNo;
        out.payload = verdict_json(within ? "yes" : "no");
        out.payload["seed"] = seed;
        out.payload["n"] = a.n;
        out.payload["p"] = a.p;
        out.payload["k"] = a.k;
        out.payload["samples"] = est.samples;
        out.payload["estimate"] = est.estimate;
        out.payload["bound"] = bound;
        out.payload["sigma"] = est.sigma;
        return out;
    }
    TrialReport rep;
    if (a.mode == "partition") {
        const Graph g = load_graph(o);
        std::vector<std::vector<Vertex>> classes;
        if (!a.classes.empty()) {
            classes = blocks_from_json(parse_json(read_text(a.classes)));
        } else {
            auto chi = chromatic_number(g);
            classes.resize(static_cast<std::size_t>(chi.chromatic_number));
            for (Vertex v = 0; v < g.num_vertices(); ++v) classes[static_cast<std::size_t>(chi.coloring[static_cast<std::size_t>(v)])].push_back(v);
        }
        rep = random_partition_choice(g, classes, a.choose_k, load_lists(a.lists, g.num_vertices()), seed, a.trials, o.jobs);
        out.payload = verdict_json(rep.choice ? "constructed" : "no");
        out.payload["classes"] = classes;
    } else if (a.mode == "multipartite") {
        if (a.parts.empty()) throw InputError("--mode multipartite needs --parts");
        MultipartiteSpec spec{parse_ints(a.parts, "--parts")};
        const int n = complete_multipartite(spec.parts).num_vertices();
        rep = multipartite_random_choice(spec, a.choose_k, load_lists(a.lists, n), seed, a.trials, o.jobs);
        out.payload = verdict_json(rep.choice ? "constructed" : "no");
        out.payload["parts"] = spec.parts;
    } else {
        throw InputError("unknown --mode \"" + a.mode + "\" (tail, partition, multipartite)");
    }
    out.code = rep.choice ? kExitYes : kExitNo;
    out.payload["k"] = a.choose_k;
    out.payload["report"] = trial_json(rep);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"List multicolouring and choosability toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::function<Outcome()> run;

    auto common = [&](CLI::App* sub, bool graph_input) {
        if (graph_input) {
            sub->add_option("-i,--input", opt.input, "Input graph JSON ('-' for stdin)");
            sub->add_flag("--dimacs", opt.dimacs, "Read the input graph as DIMACS");
        }
        sub->add_option("-o,--output", opt.output, "Result file ('-' for stdout)");
        sub->add_option("--dot", opt.dot, "Also write Graphviz output here");
        sub->add_flag("--pretty", opt.pretty, "Indent the JSON output");
        sub->add_option("--budget", opt.budget, "Enumeration budget (default: ABCHOOSE_BUDGET or 1e8)");
        sub->add_option("--seed", opt.seed, "Seed for randomised commands");
        sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    GenArgs gen;
    auto* s_gen = app.add_subcommand("gen", "Build a family graph, a gadget, or the strong lower-bound instance");
    common(s_gen, true);
    s_gen->add_option("--family", gen.family, "cycle:N, path:N, complete:N, multipartite:M1,..., theta:A,B,C, grid:R,C, cone:SPEC, line:SPEC");
    s_gen->add_option("--gadget", gen.gadget, "cone, amplifier, bg23, lift (base graph from --input)");
    s_gen->add_option("--schi-lb", gen.schi_lb, "Lower-bound instance for maximum degree d");
    s_gen->add_option("--copies", gen.copies, "Amplifier copies (default n+1)");
    s_gen->add_option("--f", gen.f, "bg23 list sizes, comma separated");
    s_gen->add_option("--k", gen.k, "lift parameter");
    s_gen->callback([&] { run = [&] { return cmd_gen(opt, gen); }; });

    auto* s_core = app.add_subcommand("core", "Strip degree-1 vertices");
    common(s_core, true);
    s_core->callback([&] { run = [&] { return cmd_core(opt); }; });

    auto* s_cls = app.add_subcommand("classify2", "Decide 2-choosability from the core shape");
    common(s_cls, true);
    s_cls->callback([&] { run = [&] { return cmd_classify2(opt); }; });

    auto* s_ker = app.add_subcommand("kernel", "Kernel of a digraph, or an odd directed cycle");
    common(s_ker, true);
    s_ker->callback([&] { run = [&] { return cmd_kernel(opt); }; });

    ChooseArgs choose;
    auto* s_choose = app.add_subcommand("choose", "Pick k colours per vertex by an orientation route");
    common(s_choose, true);
    s_choose->add_option("--route", choose.route, "degeneracy, chordal, bipartite-density, orientation, degree");
    s_choose->add_option("--lists", choose.lists, "ListAssignment JSON")->required();
    s_choose->add_option("--orientation", choose.orientation, "Digraph JSON for --route orientation");
    s_choose->add_option("--k", choose.k, "Colours per vertex");
    s_choose->callback([&] { run = [&] { return cmd_choose(opt, choose); }; });

    OracleArgs orc;
    auto* s_orc = app.add_subcommand("oracle", "Exhaustive (a:b)- or f-choosability, or one list colouring");
    common(s_orc, true);
    s_orc->add_option("--a", orc.a, "List size");
    s_orc->add_option("--b", orc.b, "Colours per vertex");
    s_orc->add_option("--f", orc.f, "Per-vertex list sizes, comma separated");
    s_orc->add_option("--lists", orc.lists, "Solve this ListAssignment instead of enumerating");
    s_orc->add_option("--witness", orc.witness, "Write a refuting assignment here");
    s_orc->add_flag("--no-prune", orc.no_prune, "Enumerate every canonical assignment");
    s_orc->callback([&] { run = [&] { return cmd_oracle(opt, orc); }; });

    HalveArgs halve;
    auto* s_halve = app.add_subcommand("halve", "Colouring from 2m-lists through a (2mk:mk) choice");
    common(s_halve, true);
    s_halve->add_option("--lists", halve.lists, "ListAssignment JSON with 2m colours per vertex")->required();
    s_halve->add_option("--m", halve.m, "Half the list size");
    s_halve->add_option("--k", halve.k, "Odd blow-up factor");
    s_halve->callback([&] { run = [&] { return cmd_halve(opt, halve); }; });

    FamilyArgs split;
    auto* s_split = app.add_subcommand("split", "Split k+l sets of size k+l");
    common(s_split, false);
    s_split->add_option("--family", split.family, "SetFamily JSON")->required();
    s_split->add_option("--k", split.k);
    s_split->add_option("--l", split.l);
    s_split->callback([&] { run = [&] { return cmd_split(opt, split); }; });

    FamilyArgs part;
    auto* s_part = app.add_subcommand("partition", "Partition km sets of size km into m groups");
    common(s_part, false);
    s_part->add_option("--family", part.family, "SetFamily JSON")->required();
    s_part->add_option("--k", part.k);
    s_part->add_option("--m", part.m);
    s_part->callback([&] { run = [&] { return cmd_partition(opt, part); }; });

    StrongArgs strong;
    auto* s_strong = app.add_subcommand("strong", "Strong colourability check, lift, or block choice");
    common(s_strong, true);
    s_strong->add_option("--mode", strong.mode, "check, lift, choose");
    s_strong->add_option("--k", strong.k);
    s_strong->add_option("--m", strong.m);
    s_strong->add_option("--blocks", strong.blocks, "BlockPartition JSON");
    s_strong->add_option("--lists", strong.lists, "ListAssignment JSON for --mode choose");
    s_strong->callback([&] { run = [&] { return cmd_strong(opt, strong); }; });

    BoundsArgs bounds;
    auto* s_bounds = app.add_subcommand("bounds", "Closed-form upper bounds on the k-th choice number");
    common(s_bounds, false);
    s_bounds->add_option("--parts", bounds.parts, "Part sizes m1,...,mr");
    s_bounds->add_option("--chi", bounds.chi, "Chromatic number");
    s_bounds->add_option("--vertices", bounds.vertices, "Number of vertices");
    s_bounds->add_option("--k", bounds.k);
    s_bounds->add_option("--binomial", bounds.binomial, "n,p,k for the binomial tail bound");
    s_bounds->callback([&] { run = [&] { return cmd_bounds(opt, bounds); }; });

    McArgs mc;
    auto* s_mc = app.add_subcommand("mc", "Monte-Carlo runs (binomial tail, random choice)");
    common(s_mc, true);
    s_mc->add_option("--mode", mc.mode, "tail, partition, multipartite");
    s_mc->add_option("--n", mc.n);
    s_mc->add_option("--p", mc.p);
    s_mc->add_option("--k", mc.k, "Tail threshold");
    s_mc->add_option("--samples", mc.samples);
    s_mc->add_option("--lists", mc.lists);
    s_mc->add_option("--classes", mc.classes, "Colour classes as {\"blocks\": [...]} (default: an optimal colouring)");
    s_mc->add_option("--parts", mc.parts);
    s_mc->add_option("--choose-k", mc.choose_k, "Colours per vertex");
    s_mc->add_option("--trials", mc.trials);
    s_mc->callback([&] { run = [&] { return cmd_mc(opt, mc); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUndecided;
    }

    Outcome out;
    try {
        out = run();
    } catch (const std::exception& e) {
        out.code = kExitUndecided;
        out.payload = Json{{"status", "error"}, {"error", e.what()}};
        out.dot.clear();
        std::cerr << "error: " << e.what() << "\n";
    }
    try {
        write_atomic(opt.output, (opt.pretty ? out.payload.dump(2) : out.payload.dump()) + "\n");
        if (!opt.dot.empty() && !out.dot.empty()) write_atomic(opt.dot, out.dot);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndecided;
    }
    return out.code;
}
