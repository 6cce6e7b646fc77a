#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trichrome/coloring.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/independent_set.hpp"

namespace trichrome {

// Colorers for graphs of bounded degree with few triangles per vertex. These
// are the subroutines every composite algorithm bottoms out in.

enum class BaseStrategy {
    /// Smallest free color along the reversed degeneracy order; at most degeneracy + 1 colors.
    greedy_degeneracy,
    /// Repeatedly pulls sparsified samples (grown to maximal independent sets)
    /// out as color classes, then finishes greedily. Never worse than
    /// greedy_degeneracy: both are run and the smaller coloring is kept.
    iterated_sparsify,
};

std::string_view to_string(BaseStrategy s) noexcept;
BaseStrategy parse_base_strategy(std::string_view name);

struct BaseColoringReport {
    BaseStrategy strategy = BaseStrategy::greedy_degeneracy;
    std::size_t max_degree = 0;
    std::size_t degeneracy = 0;
    std::uint64_t y = 1;
    /// d / tlog(d^2 / y) with unit constant; 0 for edgeless inputs.
    double target = 0.0;
    std::size_t colors_used = 0;
    /// Colors produced by the sparsify heuristic before the best-of against greedy.
    std::size_t heuristic_colors = 0;
    std::size_t sampled_classes = 0;
    bool stalled = false;
};

struct BaseColoringOptions {
    BaseStrategy strategy = BaseStrategy::greedy_degeneracy;
    double palette_constant = 4.0;
    SparsifyConstants sparsify{};
    /// Consecutive empty samples tolerated before the heuristic falls back to greedy.
    std::size_t max_empty_samples = 8;
};

/// Degeneracy-greedy coloring. Colors used <= degeneracy(g) + 1.
Coloring greedy_degeneracy_coloring(const Graph& g);

/// Proper coloring of g given its local triangle bound y (clamped to >= 1).
Coloring color_bounded_triangles(const Graph& g, std::uint64_t y, const BaseColoringOptions& options,
                                 std::uint64_t seed, BaseColoringReport* report = nullptr);

/// Per-vertex candidate colors for list coloring.
struct PaletteState {
    /// candidates[v] sorted ascending, duplicate-free.
    std::vector<std::vector<Color>> candidates;
    /// Number of colors in the global palette the candidates are drawn from.
    std::size_t palette_size = 0;

    /// Every vertex gets {0, ..., size-1}.
    static PaletteState uniform(std::size_t n, std::size_t size);
};

inline constexpr std::size_t kDefaultListRestarts = 20;

/// Greedy list coloring. The first attempt walks the reversed degeneracy
/// order taking the smallest allowed color; each restart instead picks the
/// uncolored vertex with the fewest remaining candidates, breaking ties at
/// random. Returns nullopt when every attempt runs out of candidates.
/// Throws PreconditionError if some palette is empty or sizes mismatch.
std::optional<Coloring> list_color_bounded_triangles(const Graph& g, const PaletteState& palettes,
                                                     std::uint64_t y, std::uint64_t seed,
                                                     std::size_t restarts = kDefaultListRestarts);

/// Ordered vertex partition A_1..A_k with the geometric cross-layer cap
/// |N(v) ∩ A_j| <= d * x^(i-j) for v in A_i, i <= j.
struct LayerSpec {
    std::vector<VertexSet> layers;
    double d = 1.0;
    double x = 1.0;
};

struct LayerViolation {
    std::size_t layer_i = 0;
    std::size_t layer_j = 0;
    Vertex vertex = 0;
    std::size_t count = 0;
    double cap = 0.0;
};

/// Checks the partition property and the cross-layer cap. Returns the first
/// violation (scan: i, then j, then vertex id) or nullopt when valid.
/// Throws PreconditionError if the layers do not partition the vertex set.
std::optional<LayerViolation> validate_layer_spec(const Graph& g, const LayerSpec& spec);

struct LayeredColoringReport {
    double f = 1.0;               // tlog(d^2 / y)
    std::size_t classes = 1;      // s
    std::size_t palette_size = 0; // ceil(c * d / f)
    /// Runtime bound on already-colored neighbors: d * sum_{q>=1} x^(-q s).
    double colored_neighbor_bound = 0.0;
    /// Largest observed already-colored-neighbor count.
    std::size_t max_colored_neighbors = 0;
    /// Largest observed count divided by 2d/f.
    double max_ratio_to_two_d_over_f = 0.0;
    std::size_t fallback_layers = 0;
    std::size_t colors_used = 0;
};

/// Layered list coloring: layers are grouped into s classes by index mod s,
/// each class gets its own block of ceil(c * d / f) colors, and inside a class
/// layers are list-colored from the highest index down using residual
/// palettes. A layer whose list coloring fails is finished greedily in a
/// fresh color range and counted in fallback_layers.
///
/// Throws PreconditionError when the spec fails validation.
Coloring layered_list_color(const Graph& g, const LayerSpec& spec, std::uint64_t y, double palette_constant,
                            std::uint64_t seed, LayeredColoringReport* report = nullptr,
                            std::size_t restarts = kDefaultListRestarts);

/// Number of layer classes s used by layered_list_color for decay x and
/// log-ratio f. Chosen as the least s >= 1 with x^s >= max(f, (f + 2) / 2).
std::size_t layer_class_count(double x, double f, std::size_t num_layers);

}  // namespace trichrome
