#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

/// Total vertex coloring with colors 0..colors_used-1.
struct Coloring {
    std::vector<Color> assignment;
    std::size_t colors_used = 0;

    std::size_t size() const noexcept { return assignment.size(); }
};

/// Relabels the colors appearing in `assignment` to 0..k-1 in order of first
/// appearance and sets colors_used = k. Throws PreconditionError if any
/// vertex is uncolored.
Coloring normalize_coloring(std::vector<Color> assignment);

/// Color classes of a coloring, classes[c] ascending.
std::vector<std::vector<Vertex>> color_classes(const Coloring& c);

/// Copies a coloring of an induced subgraph into `host_assignment`,
/// shifting every color by `offset`.
void embed_coloring(const Coloring& sub, const std::vector<Vertex>& to_host, Color offset,
                    std::vector<Color>& host_assignment);

/// "v c" per line, '#' comments allowed. Every vertex 0..n-1 must appear
/// exactly once; anything else is a ParseError.
Coloring load_coloring(std::istream& in, std::size_t n);
Coloring load_coloring_file(const std::string& path, std::size_t n);
void save_coloring(std::ostream& out, const Coloring& c);
void save_coloring_file(const std::string& path, const Coloring& c);

}  // namespace trichrome
