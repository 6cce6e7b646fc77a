#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trichrome/base_coloring.hpp"
#include "trichrome/bounds.hpp"
#include "trichrome/coloring.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/independent_set.hpp"

namespace trichrome {

/// One independent set removed as a fresh color class.
struct PeelEvent {
    std::string stage;
    /// Host id of the vertex whose neighborhood supplied the set, if any.
    std::optional<Vertex> pivot;
    std::size_t set_size = 0;
    std::size_t certified_floor = 0;
    /// Residual triangle count before minus after, both by fresh recount.
    std::uint64_t triangles_removed = 0;
    /// Smallest residual triangle count of a member at extraction time.
    std::uint64_t min_member_triangles = 0;
};

/// Vertices colored by a non-peeling step (base colorer, layered colorer,
/// greedy completion).
struct ResidualEvent {
    std::string stage;
    std::size_t size = 0;
    std::size_t colors = 0;
};

struct FallbackEvent {
    std::string stage;
    std::string reason;
};

/// Per-run check of the peel-count argument k <= n (y/d + 1) / d.
struct PeelCountCheck {
    std::size_t n = 0;
    std::uint64_t y = 1;
    double d = 0;
    std::size_t peels = 0;
    double bound = 0;
    bool pass() const noexcept { return static_cast<double>(peels) <= bound; }
};

struct RunTrace {
    std::string algorithm;
    bool experimental = false;
    std::vector<ParameterRecord> parameters;
    std::vector<std::string> branches;
    std::vector<PeelEvent> peels;
    std::vector<ResidualEvent> residuals;
    std::vector<FallbackEvent> fallbacks;
    std::vector<PeelCountCheck> peel_count_checks;
    std::vector<LayeredColoringReport> layered_runs;
    std::vector<BaseColoringReport> base_runs;
    /// best-of only: (algorithm, colors_used) for each candidate.
    std::vector<std::pair<std::string, std::size_t>> candidates;
    std::size_t colors_used = 0;
    double wall_ms = 0.0;

    std::size_t peeled_vertices() const noexcept;
    std::size_t residual_vertices() const noexcept;
    /// Appends everything recorded by a nested run, prefixing stage names.
    void absorb(const RunTrace& nested, const std::string& prefix);
};

struct ColoringOptions {
    BaseColoringOptions base{};
    std::size_t list_restarts = kDefaultListRestarts;
    /// Coefficient of sqrt(n) in the explicit-constant colorer. The bound is
    /// only guaranteed for the default of 100; smaller values exist so the
    /// peeling branch can be exercised on small graphs.
    double explicit_sqrt_coefficient = 100.0;
    /// Sampling attempts per Case II step of the experimental colorer.
    std::size_t conjectural_sample_attempts = 16;
};

struct ColoringRun {
    Coloring coloring;
    RunTrace trace;
};

ColoringRun color_by_vertex_count(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});
ColoringRun color_by_triangle_buckets(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});
ColoringRun color_by_edge_count(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});
ColoringRun color_by_edges_and_triangles(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});
ColoringRun color_explicit_constant(const Graph& g, const ColoringOptions& options = {});
ColoringRun color_hybrid_n(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});
ColoringRun color_hybrid_m(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});
/// Experimental: its color-count behavior depends on an unproven conjecture.
/// The output is always a proper coloring.
ColoringRun color_conjectural(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});

ColoringRun run_algorithm(AlgorithmId id, const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});

/// Runs each algorithm in `algorithms` (all eight when empty) and returns the
/// coloring with the fewest colors; ties go to the earliest algorithm.
/// With `parallel` the candidates run on separate threads; the result is
/// identical to the sequential one.
ColoringRun color_best_of(const Graph& g, std::uint64_t seed, std::span<const AlgorithmId> algorithms = {},
                          const ColoringOptions& options = {}, bool parallel = false);

/// Largest color class of a best-of coloring of G[S], where S holds the
/// vertices in at most 10 t / n triangles. certified_floor = ceil(|S| / colors).
IndependentSet independence_lower_bound(const Graph& g, std::uint64_t seed, const ColoringOptions& options = {});

}  // namespace trichrome
