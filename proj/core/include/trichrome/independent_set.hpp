#pragma once

#include <cstdint>

#include "trichrome/graph.hpp"

namespace trichrome {

struct IndependentSet {
    VertexSet members;
    /// Size the construction guarantees; members.size() >= certified_floor.
    std::size_t certified_floor = 0;
};

/// ceil(n / (2m/n + 1)) computed exactly as ceil(n^2 / (2m + n)); 0 for n = 0.
std::size_t turan_floor(std::size_t n, std::size_t m) noexcept;

/// Greedy minimum-degree independent set: take a vertex of minimum residual
/// degree (lowest id on ties), delete its closed neighborhood, repeat.
/// Requires n >= 1.
IndependentSet turan_independent_set(const Graph& g);

/// Turán set of G[N(v) ∩ restrict], returned in host ids. The floor is the
/// Turán floor of that induced subgraph. Empty neighborhood gives an empty
/// set with floor 0.
IndependentSet neighborhood_turan(const Graph& g, Vertex v, const VertexSet& restrict);

/// Knobs for the sparsified sampler; the defaults are the Markov-style
/// constants from the sampling argument.
struct SparsifyConstants {
    /// Each vertex joins U with probability min(1, sample_scale / sqrt(y)).
    double sample_scale = 0.1;
};

struct SparsifiedSample {
    IndependentSet set;
    VertexSet sampled;    // U
    VertexSet survivors;  // W: U minus triangle members of G[U] and high out-degree vertices
    double probability = 0.0;
    double out_degree_cap = 0.0;  // d / sqrt(y)
};

struct DegeneracyOrder;

/// Experimental two-stage sampler. U is drawn i.i.d.; a member of U is
/// discarded if it lies in a triangle of G[U] or has more than d/sqrt(y)
/// out-neighbors in U (edges oriented along `orientation`). The survivors W
/// induce a triangle-free graph, verified by recount. The returned set is the
/// greedy maximal independent set of G[W] in ascending-degree order.
///
/// Requires y >= 1 and orientation computed for g.
SparsifiedSample sparsified_sample(const Graph& g, const DegeneracyOrder& orientation, std::uint64_t d,
                                   std::uint64_t y, std::uint64_t seed, const SparsifyConstants& constants = {});

inline constexpr std::size_t kExactIndependentSetLimit = 40;

/// Maximum independent set by branch and bound (maximum clique of the
/// complement with greedy-coloring pruning). Throws SizeGuardError for n > 40.
IndependentSet exact_max_independent_set(const Graph& g);

/// True iff no two members of s are adjacent in g.
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace trichrome
