#include "trichrome/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "trichrome/errors.hpp"

namespace trichrome {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

Vertex checked_vertex(std::uint64_t id, std::uint64_t n, std::size_t line_no)
{
    if (id >= n)
        throw RangeError("line " + std::to_string(line_no) + ": vertex id " + std::to_string(id) +
                         " out of range for n = " + std::to_string(n));
    return static_cast<Vertex>(id);
}

Graph build(std::uint64_t n, std::vector<Edge>& edges, const std::vector<std::size_t>& edge_lines)
{
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == edges[e].second)
            throw ParseError(edge_lines[e], "self-loop on vertex " + std::to_string(edges[e].first));
    return Graph(n, edges);
}

Graph load_edge_list(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two integers");
        const auto a = parse_uint(tokens[0], line_no);
        const auto b = parse_uint(tokens[1], line_no);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        edges.emplace_back(checked_vertex(a, n, line_no), checked_vertex(b, n, line_no));
        edge_lines.push_back(line_no);
    }
    if (!have_header)
        throw ParseError(line_no + 1, "missing \"n m\" header");
    if (edges.size() != m)
        throw ParseError(line_no + 1, "header declares " + std::to_string(m) + " edge lines, found " +
                                          std::to_string(edges.size()));
    return build(n, edges, edge_lines);
}

Graph load_dimacs(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, raw)) {
        ++line_no;
        auto tokens = split_ws(raw);
        if (tokens.empty() || tokens[0] == "c")
            continue;
        if (tokens[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate problem line");
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                throw ParseError(line_no, "expected \"p edge n m\"");
            n = parse_uint(tokens[2], line_no);
            m = parse_uint(tokens[3], line_no);
            have_header = true;
        } else if (tokens[0] == "e") {
            if (!have_header)
                throw ParseError(line_no, "edge line before problem line");
            if (tokens.size() != 3)
                throw ParseError(line_no, "expected \"e u v\"");
            const auto a = parse_uint(tokens[1], line_no);
            const auto b = parse_uint(tokens[2], line_no);
            if (a == 0 || b == 0)
                throw RangeError("line " + std::to_string(line_no) + ": DIMACS ids are 1-based");
            edges.emplace_back(checked_vertex(a - 1, n, line_no), checked_vertex(b - 1, n, line_no));
            edge_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!have_header)
        throw ParseError(line_no + 1, "missing problem line");
    // Many published .col files list each edge twice and still declare the
    // single count, so m is only an upper sanity bound here.
    (void)m;
    return build(n, edges, edge_lines);
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "edge_list" || name == "edgelist")
        return GraphFormat::edge_list;
    if (name == "dimacs" || name == "col")
        return GraphFormat::dimacs;
    throw PreconditionError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat guess_graph_format(std::string_view path)
{
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
    };
    return ends_with(".col") || ends_with(".dimacs") ? GraphFormat::dimacs : GraphFormat::edge_list;
}

Graph load_graph(std::istream& in, GraphFormat format)
{
    return format == GraphFormat::dimacs ? load_dimacs(in) : load_edge_list(in);
}

Graph load_graph_file(const std::string& path, GraphFormat format)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file '" + path + "'");
    return load_graph(in, format);
}

void save_graph(std::ostream& out, const Graph& g, GraphFormat format)
{
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        out << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }
}

void save_graph_file(const std::string& path, const Graph& g, GraphFormat format)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write graph file '" + path + "'");
    save_graph(out, g, format);
}

}  // namespace trichrome
