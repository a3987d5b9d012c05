#include <doctest.h>

#include <string>

#include "abchoose/gadgets.hpp"
#include "abchoose/generators.hpp"
#include "abchoose/json_io.hpp"
#include "support.hpp"

using namespace abch;

namespace {

std::string error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("graph JSON round trip")
{
    const std::string k2 = R"({"n":2,"edges":[[0,1]]})";
    CHECK(emit_graph(parse_graph(k2)) == k2);
    CHECK(parse_graph(k2) == complete_graph(2));
    ref::Rng rng(131);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = ref::random_graph(rng, 1 + trial % 12, 0.3);
        std::string text = emit_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(emit_graph(parse_graph(text)) == text);
    }
    // Non-canonical input normalises to the canonical bytes.
    CHECK(emit_graph(parse_graph(R"({ "edges": [[2,1],[0,1]], "n": 3 })")) == R"({"n":3,"edges":[[0,1],[1,2]]})");
}

TEST_CASE("graph JSON errors carry a position")
{
    auto range = error_of([] { parse_graph(R"({"n":2,"edges":[[0,2]]})"); });
    CHECK(range.find("edges[0]") != std::string::npos);
    CHECK(range.find("out of range") != std::string::npos);
    auto dup = error_of([] { parse_graph(R"({"n":3,"edges":[[0,1],[1,2],[1,0]]})"); });
    CHECK(dup.find("duplicate edge {0,1}") != std::string::npos);
    auto syntax = error_of([] { parse_graph(R"({"n":2,"edges":[[0,1]})"); });
    CHECK(syntax.find("byte") != std::string::npos);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), FormatError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[1,1]]})"), FormatError);
    CHECK_THROWS_AS(parse_graph(R"({"n":-1,"edges":[]})"), FormatError);
}

TEST_CASE("lists, families and blocks")
{
    auto lists = lists_from_json(parse_json(R"({"lists":{"0":[2,1],"1":[3]}})"), 2);
    CHECK(lists[0] == std::vector<Color>{1, 2});
    CHECK(lists_to_json(lists).dump() == R"({"lists":{"0":[1,2],"1":[3]}})");
    CHECK_THROWS_AS(lists_from_json(parse_json(R"({"lists":{"0":[1]}})"), 2), FormatError);
    CHECK_THROWS_AS(lists_from_json(parse_json(R"({"lists":{"0":[1,1],"1":[2]}})"), 2), FormatError);
    CHECK_THROWS_AS(lists_from_json(parse_json(R"({"lists":{"0":[1],"x":[2]}})"), 2), FormatError);

    auto fam = family_from_json(parse_json(R"({"sets":[[1,2],[3,4]]})"));
    CHECK(family_to_json(fam).dump() == R"({"sets":[[1,2],[3,4]]})");
    auto blocks = blocks_from_json(parse_json(R"({"blocks":[[0,2]],"k":2})"));
    CHECK(blocks_to_json(blocks, 2).dump() == R"({"blocks":[[0,2]],"k":2})");

    Digraph d(3, std::vector<Arc>{{0, 1}, {2, 1}});
    CHECK(digraph_from_json(digraph_to_json(d)) == d);
    CHECK_THROWS_AS(digraph_from_json(parse_json(R"({"n":2,"arcs":[[0,1],[0,1]]})")), FormatError);
}

TEST_CASE("gadget JSON carries labels and sides")
{
    auto j = gadget_to_json(bg23_to_bg3(complete_graph(2), {2, 2}));
    CHECK(j["n"] == 20);
    CHECK(j["labels"]["0"] == "1,1:0");
    CHECK(j["labels"]["18"] == "u");
    CHECK(j["side"].size() == 20);
    CHECK_FALSE(gadget_to_json(cone(complete_graph(3))).contains("side"));
}

TEST_CASE("DIMACS import and DOT export")
{
    Graph g = parse_dimacs("c triangle\np edge 3 4\ne 1 2\ne 2 3\ne 3 1\ne 2 1\n");
    CHECK(g == complete_graph(3));
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), FormatError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), FormatError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nq\n"), FormatError);
    std::string dot = to_dot(path_graph(2), {"red"});
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("label=\"0: red\"") != std::string::npos);
}

}  // TEST_SUITE
