#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "trichrome/base_coloring.hpp"
#include "trichrome/bounds.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/generators.hpp"
#include "trichrome/triangles.hpp"

using namespace trichrome;

TEST_CASE("greedy degeneracy never exceeds degeneracy + 1")
{
    CHECK(greedy_degeneracy_coloring(Graph::complete(4)).colors_used == 4);
    CHECK(greedy_degeneracy_coloring(Graph::empty(0)).colors_used == 0);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = support::random_graph(60, 0.02 * static_cast<double>(seed % 20), seed);
        const auto c = greedy_degeneracy_coloring(g);
        CHECK(support::is_proper(g, c));
        CHECK(c.colors_used <= degeneracy_order(g).degeneracy + 1);
    }
}

TEST_CASE("color_bounded_triangles examples")
{
    for (auto strategy : {BaseStrategy::greedy_degeneracy, BaseStrategy::iterated_sparsify}) {
        BaseColoringOptions options;
        options.strategy = strategy;
        BaseColoringReport report;
        const auto c5 = color_bounded_triangles(Graph::cycle(5), 0, options, 1, &report);
        CHECK(support::is_proper(Graph::cycle(5), c5));
        CHECK(c5.colors_used <= 3);
        CHECK(report.y == 1);
        CHECK(report.max_degree == 2);

        const auto k4 = color_bounded_triangles(Graph::complete(4), 3, options, 1, &report);
        CHECK(k4.colors_used == 4);
        CHECK(report.colors_used == 4);
        // d / tlog(d^2 / y) with d = 3, y = 3.
        CHECK(report.target == doctest::Approx(3.0 / tlog(3.0)));
    }
}

TEST_CASE("iterated sparsify respects the greedy cap")
{
    const Graph g = gen_triangle_free_process(512, 1).graph;
    const auto degeneracy = degeneracy_order(g).degeneracy;
    BaseColoringOptions options;
    options.strategy = BaseStrategy::iterated_sparsify;
    BaseColoringReport report;
    const auto c = color_bounded_triangles(g, 1, options, 9, &report);
    CHECK(support::is_proper(g, c));
    CHECK(c.colors_used <= degeneracy + 1);
    CHECK(report.colors_used == c.colors_used);
    CHECK(report.heuristic_colors >= c.colors_used);
    const double d = static_cast<double>(report.max_degree);
    CHECK(report.target == doctest::Approx(d / tlog(d * d)));

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const Graph r = support::random_graph(150, 0.1, seed);
        const auto y = count_triangles(r).local_bound;
        const auto a = color_bounded_triangles(r, y, options, seed);
        const auto b = color_bounded_triangles(r, y, options, seed);
        CHECK(support::is_proper(r, a));
        CHECK(a.assignment == b.assignment);
    }
}

TEST_CASE("list coloring")
{
    const Graph c5 = Graph::cycle(5);
    const auto ok = list_color_bounded_triangles(c5, PaletteState::uniform(5, 3), 1, 1);
    REQUIRE(ok.has_value());
    CHECK(support::is_proper(c5, *ok));

    const auto fail = list_color_bounded_triangles(Graph::complete(3), PaletteState::uniform(3, 2), 1, 1);
    CHECK_FALSE(fail.has_value());

    PaletteState empty = PaletteState::uniform(3, 2);
    empty.candidates[1].clear();
    CHECK_THROWS_AS(list_color_bounded_triangles(Graph::complete(3), empty, 1, 1), PreconditionError);
    CHECK_THROWS_AS(list_color_bounded_triangles(Graph::complete(3), PaletteState::uniform(2, 3), 1, 1),
                    PreconditionError);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = support::random_graph(70, 0.15, seed);
        const auto d = g.max_degree();
        const auto c = list_color_bounded_triangles(g, PaletteState::uniform(70, d + 1), 1, seed);
        REQUIRE(c.has_value());
        CHECK(support::is_proper(g, *c));

        // Random lists of size deg + 1 always succeed and every color comes from its list.
        PaletteState lists;
        lists.palette_size = 3 * (d + 1);
        lists.candidates.resize(70);
        for (Vertex v = 0; v < 70; ++v) {
            for (std::size_t i = 0; i <= g.degree(v); ++i)
                lists.candidates[v].push_back(static_cast<Color>((v * 7 + i * 3) % lists.palette_size));
            std::sort(lists.candidates[v].begin(), lists.candidates[v].end());
            lists.candidates[v].erase(std::unique(lists.candidates[v].begin(), lists.candidates[v].end()),
                                      lists.candidates[v].end());
        }
        bool full = true;
        for (Vertex v = 0; v < 70; ++v)
            full = full && lists.candidates[v].size() == g.degree(v) + 1;
        if (!full)
            continue;
        const auto lc = list_color_bounded_triangles(g, lists, 1, seed);
        REQUIRE(lc.has_value());
        // normalize_coloring relabels, so compare membership through the classes instead.
        CHECK(support::is_proper(g, *lc));
    }
}

TEST_CASE("layer spec validation")
{
    // Path 0-1-2-3 split into two layers.
    const Graph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    LayerSpec spec;
    spec.layers = {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})};
    spec.d = 1;
    spec.x = 2;
    // Vertex 1 in A_1 has one neighbor in A_2, cap d * x^(1-2) = 0.5.
    const auto v = validate_layer_spec(path, spec);
    REQUIRE(v.has_value());
    CHECK(v->layer_i == 0);
    CHECK(v->layer_j == 1);
    CHECK(v->vertex == 1);
    CHECK(v->count == 1);

    spec.d = 2;
    CHECK_FALSE(validate_layer_spec(path, spec).has_value());

    spec.layers = {VertexSet(4, {0, 1}), VertexSet(4, {1, 2})};
    CHECK_THROWS_AS(validate_layer_spec(path, spec), PreconditionError);
}

TEST_CASE("layer class count")
{
    CHECK(layer_class_count(2.0, 1.0, 5) == 1);
    CHECK(layer_class_count(std::sqrt(2.0), 4.0, 10) == 4);
    for (double f : {1.0, 2.0, 3.7, 9.0})
        for (double x : {std::sqrt(2.0), 2.0, 3.0}) {
            const auto s = layer_class_count(x, f, 100);
            CHECK(std::pow(x, static_cast<double>(s)) >= std::max(f, (f + 2) / 2) - 1e-12);
            if (s > 1)
                CHECK(std::pow(x, static_cast<double>(s - 1)) < std::max(f, (f + 2) / 2));
        }
}

TEST_CASE("layered list coloring")
{
    SUBCASE("single layer")
    {
        const Graph g = Graph::cycle(6);
        LayerSpec spec{{VertexSet::all(6)}, 2.0, 2.0};
        LayeredColoringReport report;
        const auto c = layered_list_color(g, spec, 1, 4.0, 3, &report);
        CHECK(support::is_proper(g, c));
        CHECK(report.classes == 1);
        CHECK(report.fallback_layers == 0);
    }
    SUBCASE("two disconnected layers")
    {
        const Graph g = support::disjoint_union(Graph::cycle(5), Graph::cycle(5));
        LayerSpec spec{{VertexSet(10, {0, 1, 2, 3, 4}), VertexSet(10, {5, 6, 7, 8, 9})}, 4.0, 2.0};
        LayeredColoringReport report;
        const auto c = layered_list_color(g, spec, 1, 4.0, 3, &report);
        CHECK(support::is_proper(g, c));
        CHECK(c.colors_used <= report.classes * report.palette_size);
    }
    SUBCASE("invalid spec is rejected")
    {
        const Graph g = Graph::complete(4);
        LayerSpec spec{{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}, 0.5, 2.0};
        CHECK_THROWS_AS(layered_list_color(g, spec, 1, 4.0, 1), PreconditionError);
    }
    SUBCASE("blow-up buckets with x = sqrt 2")
    {
        const Graph g = blow_up(gen_triangle_free_process(40, 3).graph, 3).graph;
        const auto stats = count_triangles(g);
        const auto buckets = triangle_bucket_partition(stats);
        LayerSpec spec;
        spec.x = std::sqrt(2.0);
        for (const auto& level : buckets.by_level)
            if (!level.empty())
                spec.layers.push_back(level);
        if (!buckets.zero.empty())
            spec.layers.push_back(buckets.zero);
        spec.d = static_cast<double>(g.max_degree()) * 2.0;
        REQUIRE_FALSE(validate_layer_spec(g, spec).has_value());
        LayeredColoringReport report;
        const auto c = layered_list_color(g, spec, stats.clamped_local_bound(), 4.0, 5, &report);
        CHECK(support::is_proper(g, c));
        if (report.fallback_layers == 0)
            CHECK(c.colors_used <= report.classes * report.palette_size);
        CHECK(static_cast<double>(report.max_colored_neighbors) <= report.colored_neighbor_bound + 1e-9);
        CHECK(report.max_ratio_to_two_d_over_f <= 1.0 + 1e-12);
    }
}
