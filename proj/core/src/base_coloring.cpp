#include "trichrome/base_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "trichrome/bounds.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/rng.hpp"
#include "trichrome/triangles.hpp"

namespace trichrome {

std::string_view to_string(BaseStrategy s) noexcept
{
    switch (s) {
    case BaseStrategy::greedy_degeneracy:
        return "greedy_degeneracy";
    case BaseStrategy::iterated_sparsify:
        return "iterated_sparsify";
    }
    return "?";
}

BaseStrategy parse_base_strategy(std::string_view name)
{
    if (name == "greedy_degeneracy" || name == "greedy")
        return BaseStrategy::greedy_degeneracy;
    if (name == "iterated_sparsify" || name == "sparsify")
        return BaseStrategy::iterated_sparsify;
    throw PreconditionError("unknown base strategy '" + std::string(name) + "'");
}

namespace {

Color smallest_free(const Graph& g, Vertex v, const std::vector<Color>& assignment, std::vector<char>& scratch)
{
    std::fill(scratch.begin(), scratch.end(), 0);
    for (Vertex w : g.neighbors(v)) {
        const Color c = assignment[w];
        if (c >= 0 && static_cast<std::size_t>(c) < scratch.size())
            scratch[c] = 1;
    }
    Color c = 0;
    while (static_cast<std::size_t>(c) < scratch.size() && scratch[c])
        ++c;
    return c;
}

double base_target(std::size_t d, std::uint64_t y)
{
    if (d == 0)
        return 0.0;
    const double dd = static_cast<double>(d);
    return dd / tlog(dd * dd / static_cast<double>(y));
}

}  // namespace

Coloring greedy_degeneracy_coloring(const Graph& g)
{
    const auto order = degeneracy_order(g);
    std::vector<Color> assignment(g.num_vertices(), kUncolored);
    std::vector<char> scratch(order.degeneracy + 2, 0);
    for (auto it = order.order.rbegin(); it != order.order.rend(); ++it)
        assignment[*it] = smallest_free(g, *it, assignment, scratch);
    return normalize_coloring(std::move(assignment));
}

Coloring color_bounded_triangles(const Graph& g, std::uint64_t y, const BaseColoringOptions& options,
                                 std::uint64_t seed, BaseColoringReport* report)
{
    y = std::max<std::uint64_t>(y, 1);
    const std::size_t n = g.num_vertices();
    BaseColoringReport rep;
    rep.strategy = options.strategy;
    rep.max_degree = g.max_degree();
    rep.y = y;
    rep.target = base_target(rep.max_degree, y);

    Coloring greedy = greedy_degeneracy_coloring(g);
    rep.degeneracy = degeneracy_order(g).degeneracy;

    if (options.strategy == BaseStrategy::greedy_degeneracy || n == 0) {
        rep.colors_used = rep.heuristic_colors = greedy.colors_used;
        if (report)
            *report = rep;
        return greedy;
    }

    const auto class_budget =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(options.palette_constant * rep.target)));
    std::vector<Color> assignment(n, kUncolored);
    std::vector<Vertex> remaining(n);
    for (Vertex v = 0; v < n; ++v)
        remaining[v] = v;

    Color next_color = 0;
    std::size_t empty_streak = 0;
    std::uint64_t attempt = 0;
    while (!remaining.empty() && static_cast<std::size_t>(next_color) < class_budget) {
        const auto sub = induced_subgraph(g, VertexSet(n, remaining));
        const auto order = degeneracy_order(sub.graph);
        const auto stats = count_triangles(sub.graph);
        const auto sample = sparsified_sample(sub.graph, order, std::max<std::size_t>(order.degeneracy, 1),
                                              stats.clamped_local_bound(), mix_seed(seed, attempt++),
                                              options.sparsify);
        if (sample.set.members.empty()) {
            if (++empty_streak > options.max_empty_samples) {
                rep.stalled = true;
                break;
            }
            continue;
        }
        empty_streak = 0;

        // Grow the sample to a maximal independent set of the residual.
        const std::size_t rn = sub.graph.num_vertices();
        std::vector<char> blocked(rn, 0), chosen(rn, 0);
        for (Vertex v : sample.set.members) {
            chosen[v] = 1;
            for (Vertex w : sub.graph.neighbors(v))
                blocked[w] = 1;
        }
        std::vector<Vertex> by_degree(rn);
        for (Vertex v = 0; v < rn; ++v)
            by_degree[v] = v;
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](Vertex a, Vertex b) { return sub.graph.degree(a) < sub.graph.degree(b); });
        for (Vertex v : by_degree) {
            if (chosen[v] || blocked[v])
                continue;
            chosen[v] = 1;
            for (Vertex w : sub.graph.neighbors(v))
                blocked[w] = 1;
        }
        std::vector<Vertex> next_remaining;
        for (Vertex v = 0; v < rn; ++v) {
            if (chosen[v])
                assignment[sub.to_host[v]] = next_color;
            else
                next_remaining.push_back(sub.to_host[v]);
        }
        ++next_color;
        ++rep.sampled_classes;
        remaining = std::move(next_remaining);
    }
    if (!remaining.empty()) {
        if (!rep.stalled && static_cast<std::size_t>(next_color) >= class_budget)
            rep.stalled = true;
        const auto sub = induced_subgraph(g, VertexSet(n, remaining));
        const auto rest = greedy_degeneracy_coloring(sub.graph);
        embed_coloring(rest, sub.to_host, next_color, assignment);
    }
    Coloring heuristic = normalize_coloring(std::move(assignment));
    rep.heuristic_colors = heuristic.colors_used;
    Coloring& chosen = heuristic.colors_used <= greedy.colors_used ? heuristic : greedy;
    rep.colors_used = chosen.colors_used;
    if (report)
        *report = rep;
    return std::move(chosen);
}

PaletteState PaletteState::uniform(std::size_t n, std::size_t size)
{
    PaletteState p;
    p.palette_size = size;
    std::vector<Color> all(size);
    for (std::size_t c = 0; c < size; ++c)
        all[c] = static_cast<Color>(c);
    p.candidates.assign(n, all);
    return p;
}

namespace {

bool list_color_attempt(const Graph& g, const PaletteState& palettes, std::span<const Vertex> fixed_order,
                        Rng* rng, std::vector<Color>& assignment)
{
    const std::size_t n = g.num_vertices();
    assignment.assign(n, kUncolored);
    std::vector<std::unordered_set<Color>> forbidden(n);
    std::vector<std::size_t> remaining(n);
    for (Vertex v = 0; v < n; ++v)
        remaining[v] = palettes.candidates[v].size();

    auto pick_color = [&](Vertex v) -> Color {
        for (Color c : palettes.candidates[v])
            if (!forbidden[v].contains(c))
                return c;
        return kUncolored;
    };
    auto commit = [&](Vertex v, Color c) {
        assignment[v] = c;
        for (Vertex w : g.neighbors(v)) {
            if (assignment[w] != kUncolored)
                continue;
            const auto& cand = palettes.candidates[w];
            if (std::binary_search(cand.begin(), cand.end(), c) && forbidden[w].insert(c).second)
                --remaining[w];
        }
    };

    if (rng == nullptr) {
        for (Vertex v : fixed_order) {
            const Color c = pick_color(v);
            if (c == kUncolored)
                return false;
            commit(v, c);
        }
        return true;
    }

    std::vector<Vertex> ties;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        ties.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (assignment[v] != kUncolored)
                continue;
            if (remaining[v] < best) {
                best = remaining[v];
                ties.clear();
            }
            if (remaining[v] == best)
                ties.push_back(v);
        }
        if (best == 0)
            return false;
        const Vertex v = ties[rng->below(ties.size())];
        commit(v, pick_color(v));
    }
    return true;
}

}  // namespace

std::optional<Coloring> list_color_bounded_triangles(const Graph& g, const PaletteState& palettes,
                                                     std::uint64_t /*y*/, std::uint64_t seed,
                                                     std::size_t restarts)
{
    const std::size_t n = g.num_vertices();
    if (palettes.candidates.size() != n)
        throw PreconditionError("palette count does not match vertex count");
    for (Vertex v = 0; v < n; ++v) {
        const auto& cand = palettes.candidates[v];
        if (cand.empty())
            throw PreconditionError("vertex " + std::to_string(v) + " has an empty palette");
        if (!std::is_sorted(cand.begin(), cand.end()) ||
            std::adjacent_find(cand.begin(), cand.end()) != cand.end())
            throw PreconditionError("palette of vertex " + std::to_string(v) + " is not sorted and unique");
    }

    const auto order = degeneracy_order(g);
    std::vector<Vertex> reversed(order.order.rbegin(), order.order.rend());
    std::vector<Color> assignment;
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(restarts, 1); ++attempt) {
        if (list_color_attempt(g, palettes, reversed, attempt == 0 ? nullptr : &rng, assignment)) {
            Coloring out;
            std::unordered_set<Color> distinct(assignment.begin(), assignment.end());
            out.colors_used = distinct.size();
            out.assignment = std::move(assignment);
            return out;
        }
    }
    return std::nullopt;
}

std::optional<LayerViolation> validate_layer_spec(const Graph& g, const LayerSpec& spec)
{
    const std::size_t n = g.num_vertices();
    std::vector<int> layer_of(n, -1);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        if (spec.layers[i].universe() != n)
            throw PreconditionError("layer " + std::to_string(i) + " has the wrong universe");
        for (Vertex v : spec.layers[i]) {
            if (layer_of[v] != -1)
                throw PreconditionError("vertex " + std::to_string(v) + " appears in two layers");
            layer_of[v] = static_cast<int>(i);
            ++covered;
        }
    }
    if (covered != n)
        throw PreconditionError("layers do not cover every vertex");
    if (spec.d < 1.0 || spec.x < 1.0)
        throw PreconditionError("layer spec requires d >= 1 and x >= 1");

    std::vector<std::size_t> count(spec.layers.size());
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        for (Vertex v : spec.layers[i]) {
            std::fill(count.begin(), count.end(), 0);
            for (Vertex w : g.neighbors(v))
                ++count[layer_of[w]];
            for (std::size_t j = i; j < spec.layers.size(); ++j) {
                const double cap = spec.d * std::pow(spec.x, static_cast<double>(i) - static_cast<double>(j));
                if (static_cast<double>(count[j]) > cap * (1 + 1e-12))
                    return LayerViolation{i, j, v, count[j], cap};
            }
        }
    }
    return std::nullopt;
}

std::size_t layer_class_count(double x, double f, std::size_t num_layers)
{
    const std::size_t cap = std::max<std::size_t>(num_layers, 1);
    const double target = std::max(f, (f + 2.0) / 2.0);
    if (x <= 1.0)
        return cap;
    std::size_t s = 1;
    double power = x;
    while (power < target && s < cap) {
        power *= x;
        ++s;
    }
    return s;
}

Coloring layered_list_color(const Graph& g, const LayerSpec& spec, std::uint64_t y, double palette_constant,
                            std::uint64_t seed, LayeredColoringReport* report, std::size_t restarts)
{
    if (auto bad = validate_layer_spec(g, spec))
        throw PreconditionError("layer spec violates the cross-layer cap at vertex " + std::to_string(bad->vertex) +
                                " (layers " + std::to_string(bad->layer_i) + " -> " + std::to_string(bad->layer_j) +
                                ")");
    y = std::max<std::uint64_t>(y, 1);
    const std::size_t n = g.num_vertices();
    const std::size_t k = spec.layers.size();

    LayeredColoringReport rep;
    rep.f = tlog(spec.d * spec.d / static_cast<double>(y));
    rep.classes = layer_class_count(spec.x, rep.f, k);
    rep.palette_size = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(palette_constant * spec.d / rep.f)));
    const std::size_t per_class = k == 0 ? 0 : (k + rep.classes - 1) / rep.classes;
    for (std::size_t q = 1; q < per_class; ++q)
        rep.colored_neighbor_bound += spec.d * std::pow(spec.x, -static_cast<double>(q * rep.classes));
    const double two_d_over_f = 2.0 * spec.d / rep.f;

    std::vector<std::size_t> class_of(n, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (Vertex v : spec.layers[i])
            class_of[v] = i % rep.classes;

    std::vector<Color> assignment(n, kUncolored);
    const auto P = static_cast<Color>(rep.palette_size);
    Color next_fresh = static_cast<Color>(rep.classes) * P;
    std::uint64_t layer_seed = 0;

    for (std::size_t r = 0; r < rep.classes; ++r) {
        const Color lo = static_cast<Color>(r) * P;
        const Color hi = lo + P;
        std::vector<std::size_t> class_layers;
        for (std::size_t i = r; i < k; i += rep.classes)
            class_layers.push_back(i);

        for (auto it = class_layers.rbegin(); it != class_layers.rend(); ++it) {
            const auto& layer = spec.layers[*it];
            if (layer.empty())
                continue;
            PaletteState palettes;
            palettes.palette_size = rep.palette_size;
            bool exhausted = false;
            for (Vertex v : layer) {
                std::vector<char> used(rep.palette_size, 0);
                std::size_t colored = 0;
                for (Vertex w : g.neighbors(v)) {
                    const Color c = assignment[w];
                    if (c == kUncolored || class_of[w] != r)
                        continue;
                    ++colored;
                    if (c >= lo && c < hi)
                        used[c - lo] = 1;
                }
                rep.max_colored_neighbors = std::max(rep.max_colored_neighbors, colored);
                rep.max_ratio_to_two_d_over_f =
                    std::max(rep.max_ratio_to_two_d_over_f, static_cast<double>(colored) / two_d_over_f);
                if (static_cast<double>(colored) > rep.colored_neighbor_bound + 1e-9)
                    throw InvariantViolation("vertex " + std::to_string(v) + " has " + std::to_string(colored) +
                                             " colored neighbors in its class, above the geometric bound");
                std::vector<Color> cand;
                for (std::size_t c = 0; c < rep.palette_size; ++c)
                    if (!used[c])
                        cand.push_back(lo + static_cast<Color>(c));
                exhausted = exhausted || cand.empty();
                palettes.candidates.push_back(std::move(cand));
            }

            const auto sub = induced_subgraph(g, layer);
            std::optional<Coloring> listed;
            if (!exhausted)
                listed = list_color_bounded_triangles(sub.graph, palettes, y, mix_seed(seed, layer_seed++), restarts);
            if (listed) {
                embed_coloring(*listed, sub.to_host, 0, assignment);
            } else {
                const auto rest = greedy_degeneracy_coloring(sub.graph);
                embed_coloring(rest, sub.to_host, next_fresh, assignment);
                next_fresh += static_cast<Color>(rest.colors_used);
                ++rep.fallback_layers;
            }
        }
    }
    Coloring out = normalize_coloring(std::move(assignment));
    rep.colors_used = out.colors_used;
    if (report)
        *report = rep;
    return out;
}

}  // namespace trichrome
