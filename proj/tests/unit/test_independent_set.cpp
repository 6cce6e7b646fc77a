#include <doctest.h>

#include <cmath>
#include <string>

#include "support.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/generators.hpp"
#include "trichrome/independent_set.hpp"
#include "trichrome/triangles.hpp"

using namespace trichrome;

namespace {

void check_independent(const Graph& g, const IndependentSet& s)
{
    const auto members = s.members.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            CHECK_FALSE(g.adjacent(members[i], members[j]));
    CHECK(members.size() >= s.certified_floor);
}

}  // namespace

TEST_CASE("turan floor")
{
    CHECK(turan_floor(0, 0) == 0);
    CHECK(turan_floor(5, 0) == 5);
    CHECK(turan_floor(5, 5) == 2);
    CHECK(turan_floor(4, 6) == 1);
    CHECK(turan_floor(10, 15) == 3);
}

TEST_CASE("turan independent set examples")
{
    const auto empty = turan_independent_set(Graph::empty(5));
    CHECK(empty.members.size() == 5);

    const auto c5 = turan_independent_set(Graph::cycle(5));
    CHECK(c5.members.size() == 2);
    CHECK(c5.certified_floor == 2);
    check_independent(Graph::cycle(5), c5);

    const auto k4 = turan_independent_set(Graph::complete(4));
    CHECK(k4.members.size() == 1);
    CHECK_THROWS_AS(turan_independent_set(Graph::empty(0)), PreconditionError);
}

TEST_CASE("turan guarantee on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const std::size_t n = 1 + seed % 200;
        const double p = static_cast<double>(seed % 17) / 20.0;
        const Graph g = support::random_graph(n, p, seed * 7919);
        const auto s = turan_independent_set(g);
        const std::size_t m = g.num_edges();
        // ceil(n / (2m/n + 1)) = ceil(n^2 / (2m + n))
        const std::size_t floor = (n * n + 2 * m + n - 1) / (2 * m + n);
        CHECK(s.certified_floor == floor);
        CHECK(s.members.size() >= floor);
        CHECK(is_independent(g, s.members));
    }
}

TEST_CASE("neighborhood turan")
{
    const Graph k4 = Graph::complete(4);
    const auto s = neighborhood_turan(k4, 0, VertexSet::all(4));
    CHECK(s.members.size() == 1);
    CHECK_FALSE(s.members.contains(0));

    const Graph st = support::star(6);
    CHECK(neighborhood_turan(st, 0, VertexSet::all(7)).members.size() == 6);

    const Graph w = support::wheel(5);
    const auto rim = neighborhood_turan(w, 0, VertexSet::all(6));
    CHECK(rim.certified_floor == 2);
    CHECK(rim.members.size() >= 2);
    check_independent(w, rim);

    const auto none = neighborhood_turan(st, 1, VertexSet(7, {2, 3}));
    CHECK(none.members.empty());
    CHECK(none.certified_floor == 0);

    const auto restricted = neighborhood_turan(st, 0, VertexSet(7, {2, 3, 0}));
    CHECK(restricted.members == VertexSet(7, {2, 3}));
}

TEST_CASE("sparsified sample properties")
{
    auto check_sample = [](const Graph& g, std::uint64_t y, std::uint64_t seed) {
        const auto order = degeneracy_order(g);
        const auto d = order.degeneracy;
        const auto s = sparsified_sample(g, order, d, y, seed);
        const double p = std::min(1.0, 0.1 / std::sqrt(static_cast<double>(y)));
        CHECK(s.probability == doctest::Approx(p));
        // W is a subset of U, triangle free and of bounded out-degree.
        for (Vertex v : s.survivors)
            CHECK(s.sampled.contains(v));
        const auto w = induced_subgraph(g, s.survivors);
        CHECK(count_triangles(w.graph).total == 0);
        for (Vertex v : s.survivors) {
            std::size_t out = 0;
            for (Vertex u : g.neighbors(v))
                out += s.survivors.contains(u) && order.position[u] > order.position[v];
            CHECK(static_cast<double>(out) <= static_cast<double>(d) / std::sqrt(static_cast<double>(y)));
        }
        for (Vertex v : s.set.members)
            CHECK(s.survivors.contains(v));
        CHECK(is_independent(g, s.set.members));
        // Maximal inside W.
        for (Vertex v : s.survivors) {
            if (s.set.members.contains(v))
                continue;
            bool blocked = false;
            for (Vertex u : g.neighbors(v))
                blocked = blocked || s.set.members.contains(u);
            CHECK(blocked);
        }
        return s;
    };

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        check_sample(support::random_graph(120, 0.2, seed), 1 + seed % 5, seed);
        check_sample(Graph::complete(4), 3, seed);
    }
    const Graph tf = gen_triangle_free_process(300, 5).graph;
    const auto s = check_sample(tf, 1, 11);
    CHECK(s.probability == doctest::Approx(0.1));

    const Graph g = support::random_graph(80, 0.3, 3);
    const auto order = degeneracy_order(g);
    const auto a = sparsified_sample(g, order, order.degeneracy, 2, 42);
    const auto b = sparsified_sample(g, order, order.degeneracy, 2, 42);
    CHECK(a.set.members == b.set.members);
    CHECK(a.sampled == b.sampled);
}

TEST_CASE("sparsified sample golden")
{
    const Graph base = gen_triangle_free_process(50, 2).graph;
    const Graph g = blow_up(base, 4).graph;
    REQUIRE(g.num_vertices() == 200);
    const auto order = degeneracy_order(g);
    const auto s = sparsified_sample(g, order, order.degeneracy, 1, 2024);
    std::string text;
    for (Vertex v : s.set.members)
        text += std::to_string(v) + "\n";
    const auto diff = support::check_golden("sparsified_sample_blowup200.txt", text);
    CHECK_MESSAGE(diff.empty(), diff);
}

TEST_CASE("exact maximum independent set")
{
    CHECK(exact_max_independent_set(Graph::cycle(5)).members.size() == 2);
    CHECK(exact_max_independent_set(support::petersen()).members.size() == 4);
    CHECK(exact_max_independent_set(support::complete_bipartite(3, 3)).members.size() == 3);
    CHECK(exact_max_independent_set(Graph::empty(0)).members.size() == 0);
    CHECK_THROWS_AS(exact_max_independent_set(Graph::empty(41)), SizeGuardError);

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t n = 1 + seed % 16;
        const Graph g = support::random_graph(n, 0.1 + 0.05 * static_cast<double>(seed % 12), seed);
        const auto s = exact_max_independent_set(g);
        CHECK(is_independent(g, s.members));
        CHECK(s.members.size() == support::subset_alpha(g));
    }
}
