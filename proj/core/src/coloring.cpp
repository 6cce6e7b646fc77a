#include "trichrome/coloring.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "trichrome/errors.hpp"

namespace trichrome {

Coloring normalize_coloring(std::vector<Color> assignment)
{
    std::vector<Color> relabel;
    Coloring out;
    for (std::size_t v = 0; v < assignment.size(); ++v) {
        const Color c = assignment[v];
        if (c < 0)
            throw PreconditionError("vertex " + std::to_string(v) + " is uncolored");
        if (static_cast<std::size_t>(c) >= relabel.size())
            relabel.resize(static_cast<std::size_t>(c) + 1, kUncolored);
        if (relabel[c] == kUncolored)
            relabel[c] = static_cast<Color>(out.colors_used++);
        assignment[v] = relabel[c];
    }
    out.assignment = std::move(assignment);
    return out;
}

std::vector<std::vector<Vertex>> color_classes(const Coloring& c)
{
    std::vector<std::vector<Vertex>> classes(c.colors_used);
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        classes.at(static_cast<std::size_t>(c.assignment[v])).push_back(static_cast<Vertex>(v));
    return classes;
}

void embed_coloring(const Coloring& sub, const std::vector<Vertex>& to_host, Color offset,
                    std::vector<Color>& host_assignment)
{
    for (std::size_t v = 0; v < sub.assignment.size(); ++v)
        host_assignment[to_host[v]] = sub.assignment[v] + offset;
}

Coloring load_coloring(std::istream& in, std::size_t n)
{
    std::vector<Color> assignment(n, kUncolored);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        long long v = 0, c = 0;
        if (!(ls >> v))
            continue;
        std::string rest;
        if (!(ls >> c) || (ls >> rest))
            throw ParseError(line_no, "expected \"v c\"");
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        if (c < 0 || c > INT32_MAX)
            throw ParseError(line_no, "color " + std::to_string(c) + " out of range");
        if (assignment[v] != kUncolored)
            throw ParseError(line_no, "vertex " + std::to_string(v) + " colored twice");
        assignment[v] = static_cast<Color>(c);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (assignment[v] == kUncolored)
            throw ParseError(line_no + 1, "vertex " + std::to_string(v) + " has no color");
    Coloring out;
    out.assignment = std::move(assignment);
    std::vector<char> seen;
    for (Color c : out.assignment) {
        if (static_cast<std::size_t>(c) >= seen.size())
            seen.resize(static_cast<std::size_t>(c) + 1, 0);
        if (!seen[c]) {
            seen[c] = 1;
            ++out.colors_used;
        }
    }
    return out;
}

Coloring load_coloring_file(const std::string& path, std::size_t n)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open coloring file '" + path + "'");
    return load_coloring(in, n);
}

void save_coloring(std::ostream& out, const Coloring& c)
{
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        out << v << ' ' << c.assignment[v] << '\n';
}

void save_coloring_file(const std::string& path, const Coloring& c)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write coloring file '" + path + "'");
    save_coloring(out, c);
}

}  // namespace trichrome
