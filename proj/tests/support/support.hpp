#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trichrome/coloring.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/oracles.hpp"

// Brute-force reference implementations. None of these share code with the
// library; they are deliberately naive so they can serve as ground truth.
namespace support {

using trichrome::Graph;
using trichrome::Vertex;

/// Dense adjacency matrix of g.
std::vector<std::vector<bool>> adjacency_matrix(const Graph& g);

/// a_v by enumerating every vertex triple.
std::vector<std::uint64_t> cubic_triangle_counts(const Graph& g);

/// alpha by enumerating all 2^n subsets. n <= 24.
std::size_t subset_alpha(const Graph& g);

/// alpha by branching on a max-degree vertex (take it or drop it). n <= 128.
std::size_t branch_alpha(const Graph& g);

/// Max weight of an independent set, all 2^n subsets. n <= 20.
trichrome::Fraction weighted_alpha(const Graph& g, const std::vector<trichrome::Fraction>& w);

/// True iff g has a proper k-coloring, by trying all k^n assignments with
/// the first vertex fixed to color 0. Intended for n <= 9.
bool exhaustive_k_colorable(const Graph& g, std::size_t k);
std::size_t exhaustive_chromatic(const Graph& g);

/// G(n, p) drawn with std::mt19937_64, independent of the library's Rng.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

Graph star(std::size_t leaves);
Graph wheel(std::size_t rim);
Graph petersen();
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Disjoint union, b's ids shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

/// True iff no edge is monochromatic and every vertex is colored.
bool is_proper(const Graph& g, const trichrome::Coloring& c);

/// Absolute path of a file under tests/fixtures.
std::string fixture_path(const std::string& name);

/// Compares `text` with tests/golden/<name>. With TRICHROME_UPDATE_GOLDEN=1
/// the file is (re)written instead and the check passes. Returns an empty
/// string on success, otherwise a description of the mismatch.
std::string check_golden(const std::string& name, const std::string& text);

}  // namespace support
