#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/graph_io.hpp"

using namespace trichrome;

namespace {

Graph parse(const std::string& text, GraphFormat f)
{
    std::istringstream in(text);
    return load_graph(in, f);
}

std::string dump(const Graph& g, GraphFormat f)
{
    std::ostringstream out;
    save_graph(out, g, f);
    return out.str();
}

Graph k4_plus_pendant() { return Graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("edge list loading")
{
    const Graph k3 = parse("3 3\n0 1\n1 2\n0 2\n", GraphFormat::edge_list);
    CHECK(k3.num_vertices() == 3);
    CHECK(k3.num_edges() == 3);
    CHECK(k3 == Graph::complete(3));

    const Graph two = parse("2 0\n", GraphFormat::edge_list);
    CHECK(two.num_vertices() == 2);
    CHECK(two.num_edges() == 0);

    const Graph commented = parse("# header\n3 2  # n m\n0 1\n# gap\n2 1\n", GraphFormat::edge_list);
    CHECK(commented.num_edges() == 2);
    CHECK(commented.adjacent(1, 2));
}

TEST_CASE("duplicate and reversed lines collapse")
{
    const Graph g(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(g.num_edges() == 2);
}

TEST_CASE("dimacs loading")
{
    std::string text = "c K4\np edge 4 6\n";
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v)
            text += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    const Graph k4 = parse(text, GraphFormat::dimacs);
    CHECK(k4 == Graph::complete(4));

    const Graph m3 = load_graph_file(support::fixture_path("myciel3.col"), GraphFormat::dimacs);
    CHECK(m3.num_vertices() == 11);
    CHECK(m3.num_edges() == 20);
}

TEST_CASE("malformed input is rejected with a line number")
{
    CHECK_THROWS_AS(parse("3 1\n0 0\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse("3 1\n0 3\n", GraphFormat::edge_list), RangeError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse("3 1\n0 x\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse("p edge 3 1\ne 0 1\n", GraphFormat::dimacs), RangeError);
    try {
        parse("3 2\n0 1\n1 oops\n", GraphFormat::edge_list);
        FAIL("expected ParseError");
    }
    catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_graph_format("graphml"), PreconditionError);
    CHECK(guess_graph_format("a/b/x.col") == GraphFormat::dimacs);
    CHECK(guess_graph_format("x.txt") == GraphFormat::edge_list);
}

TEST_CASE("save and load round-trip in both formats")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = support::random_graph(5 + seed, 0.3, seed);
        for (auto f : {GraphFormat::edge_list, GraphFormat::dimacs}) {
            const Graph back = parse(dump(g, f), f);
            CHECK(back == g);
        }
    }
}

TEST_CASE("adjacency is symmetric and sorted")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = support::random_graph(30, 0.2, seed);
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto nb = g.neighbors(v);
            degree_sum += nb.size();
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (Vertex u : nb) {
                CHECK(u != v);
                CHECK(g.adjacent(u, v));
            }
        }
        CHECK(degree_sum == 2 * g.num_edges());
    }
}

TEST_CASE("induced subgraph")
{
    const auto k3 = induced_subgraph(Graph::complete(4), VertexSet(4, {0, 1, 2}));
    CHECK(k3.graph == Graph::complete(3));
    CHECK(k3.to_host == std::vector<Vertex>{0, 1, 2});

    const auto pair = induced_subgraph(Graph::cycle(5), VertexSet(5, {2, 0}));
    CHECK(pair.graph.num_vertices() == 2);
    CHECK(pair.graph.num_edges() == 0);
    CHECK(pair.to_host == std::vector<Vertex>{0, 2});

    const Graph g = support::random_graph(25, 0.3, 4);
    const auto all = induced_subgraph(g, VertexSet::all(25));
    CHECK(all.graph == g);
    for (Vertex v = 0; v < 25; ++v)
        CHECK(all.to_host[v] == v);

    const VertexSet s(25, {1, 3, 4, 8, 15, 22});
    const auto sub = induced_subgraph(g, s);
    for (Vertex a = 0; a < sub.graph.num_vertices(); ++a)
        for (Vertex b = a + 1; b < sub.graph.num_vertices(); ++b)
            CHECK(sub.graph.adjacent(a, b) == g.adjacent(sub.to_host[a], sub.to_host[b]));
}

TEST_CASE("vertex sets")
{
    const VertexSet s(10, {5, 1, 5, 3});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK_THROWS_AS(VertexSet(4, {4}), RangeError);
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy_order(Graph::complete(4)).degeneracy == 3);
    CHECK(degeneracy_order(Graph::cycle(5)).degeneracy == 2);
    CHECK(degeneracy_order(support::star(5)).degeneracy == 1);
    CHECK(degeneracy_order(Graph::empty(3)).degeneracy == 0);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = support::random_graph(40, 0.15, seed);
        const auto order = degeneracy_order(g);
        REQUIRE(order.order.size() == g.num_vertices());
        std::size_t max_back = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            CHECK(order.order[order.position[v]] == v);
            max_back = std::max(max_back, order.back_degree(g, v));
        }
        CHECK(max_back == order.degeneracy);
    }
}

TEST_CASE("d-core")
{
    CHECK(d_core(Graph::complete(4), 3).size() == 4);
    CHECK(d_core(Graph::cycle(5), 3).empty());
    CHECK(d_core(k4_plus_pendant(), 3) == VertexSet(5, {0, 1, 2, 3}));

    // The core is the largest set of minimum degree >= d; compare with all subsets.
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const Graph g = support::random_graph(12, 0.4, seed);
        const auto adj = support::adjacency_matrix(g);
        for (std::size_t d = 1; d <= 4; ++d) {
            std::uint32_t best = 0;
            for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
                bool ok = true;
                for (int v = 0; v < 12 && ok; ++v) {
                    if (!(mask >> v & 1))
                        continue;
                    std::size_t deg = 0;
                    for (int u = 0; u < 12; ++u)
                        deg += (mask >> u & 1) && adj[v][u];
                    ok = deg >= d;
                }
                if (ok)
                    best |= mask;
            }
            const auto core = d_core(g, d);
            std::uint32_t got = 0;
            for (Vertex v : core)
                got |= 1u << v;
            CHECK(got == best);
        }
    }
}
