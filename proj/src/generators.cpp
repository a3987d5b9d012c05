#include "abchoose/generators.hpp"

#include <sstream>
#include <stdexcept>

#include "abchoose/gadgets.hpp"
#include "abchoose/structure.hpp"

namespace abch {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw std::invalid_argument(what);
}

const FamilySpec& single_base(const FamilySpec& spec, const char* name)
{
    require(spec.base.size() == 1, std::string(name) + ": exactly one base graph required");
    return spec.base.front();
}

}  // namespace

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle: n must be at least 3");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    require(n >= 1, "path: n must be at least 1");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete: n must be at least 1");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts)
{
    require(!parts.empty(), "multipartite: at least one part required");
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 1, "multipartite: part sizes must be positive");
        n += parts[i];
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    }
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    return g;
}

Graph theta_graph(int a, int b, int c)
{
    require(a >= 1 && b >= 1 && c >= 1, "theta: path lengths must be positive");
    int ones = (a == 1) + (b == 1) + (c == 1);
    require(ones <= 1, "theta: at most one path may have length 1 (otherwise a multi-edge)");
    Graph g(2 + (a - 1) + (b - 1) + (c - 1));
    Vertex next = 2;
    for (int len : {a, b, c}) {
        Vertex prev = 0;
        for (int i = 1; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

Graph grid_graph(int rows, int cols)
{
    require(rows >= 1 && cols >= 1, "grid: dimensions must be positive");
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Vertex v = r * cols + c;
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

Graph generate(const FamilySpec& spec)
{
    const auto& s = spec.sizes;
    auto arity = [&](std::size_t n, const char* name) {
        require(s.size() == n, std::string(name) + ": expected " + std::to_string(n) + " parameter(s)");
    };
    switch (spec.kind) {
    case Family::Cycle: arity(1, "cycle"); return cycle_graph(s[0]);
    case Family::Path: arity(1, "path"); return path_graph(s[0]);
    case Family::Complete: arity(1, "complete"); return complete_graph(s[0]);
    case Family::CompleteMultipartite: return complete_multipartite(s);
    case Family::Theta: arity(3, "theta"); return theta_graph(s[0], s[1], s[2]);
    case Family::Grid: arity(2, "grid"); return grid_graph(s[0], s[1]);
    case Family::ConeOf: return cone(generate(single_base(spec, "cone"))).graph;
    case Family::LineGraphOf: return line_graph(generate(single_base(spec, "line")));
    }
    throw std::invalid_argument("unknown family");
}

FamilySpec parse_family_spec(const std::string& text)
{
    auto colon = text.find(':');
    require(colon != std::string::npos, "family spec '" + text + "': expected <kind>:<params>");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    FamilySpec spec;
    if (kind == "cone" || kind == "line") {
        spec.kind = kind == "cone" ? Family::ConeOf : Family::LineGraphOf;
        spec.base.push_back(parse_family_spec(rest));
        return spec;
    }
    if (kind == "cycle") spec.kind = Family::Cycle;
    else if (kind == "path") spec.kind = Family::Path;
    else if (kind == "complete") spec.kind = Family::Complete;
    else if (kind == "multipartite") spec.kind = Family::CompleteMultipartite;
    else if (kind == "theta") spec.kind = Family::Theta;
    else if (kind == "grid") spec.kind = Family::Grid;
    else throw std::invalid_argument("family spec: unknown kind '" + kind + "'");

    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            spec.sizes.push_back(std::stoi(item, &used));
            require(used == item.size(), "");
        } catch (const std::exception&) {
            throw std::invalid_argument("family spec: bad integer '" + item + "'");
        }
    }
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    auto join = [&](const char* kind) {
        std::string out = kind;
        out += ':';
        for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(spec.sizes[i]);
        }
        return out;
    };
    switch (spec.kind) {
    case Family::Cycle: return join("cycle");
    case Family::Path: return join("path");
    case Family::Complete: return join("complete");
    case Family::CompleteMultipartite: return join("multipartite");
    case Family::Theta: return join("theta");
    case Family::Grid: return join("grid");
    case Family::ConeOf: return "cone:" + to_string(spec.base.at(0));
    case Family::LineGraphOf: return "line:" + to_string(spec.base.at(0));
    }
    return "?";
}

}  // namespace abch
