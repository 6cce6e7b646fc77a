#include "support.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace support {

using trichrome::Edge;
using trichrome::Fraction;

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : g.edges()) {
        a[u][v] = true;
        a[v][u] = true;
    }
    return a;
}

std::vector<std::uint64_t> cubic_triangle_counts(const Graph& g)
{
    const auto a = adjacency_matrix(g);
    const std::size_t n = g.num_vertices();
    std::vector<std::uint64_t> count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (a[i][j] && a[j][k] && a[i][k]) {
                    ++count[i];
                    ++count[j];
                    ++count[k];
                }
    return count;
}

namespace {

bool subset_independent(const std::vector<std::vector<bool>>& a, std::uint64_t mask)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1))
            continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if ((mask >> j & 1) && a[i][j])
                return false;
    }
    return true;
}

Fraction add(Fraction x, Fraction y)
{
    const __int128 num = static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den;
    const __int128 den = static_cast<__int128>(x.den) * y.den;
    const auto g = std::gcd(static_cast<std::int64_t>(num < 0 ? -num : num), static_cast<std::int64_t>(den));
    if (g == 0)
        return {0, 1};
    return {static_cast<std::int64_t>(num / g), static_cast<std::int64_t>(den / g)};
}

}  // namespace

std::size_t subset_alpha(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > 24)
        throw std::length_error("subset_alpha: n too large");
    const auto a = adjacency_matrix(g);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size > best && subset_independent(a, mask))
            best = size;
    }
    return best;
}

namespace {

using Mask = std::bitset<128>;

std::size_t branch_alpha_rec(const std::vector<Mask>& adj, Mask live)
{
    if (live.none())
        return 0;
    std::size_t pick = 0, pick_degree = 0;
    bool first = true;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (!live[v])
            continue;
        const auto degree = (adj[v] & live).count();
        if (degree == 0) {
            live.reset(v);
            return 1 + branch_alpha_rec(adj, live);
        }
        if (first || degree > pick_degree) {
            pick = v;
            pick_degree = degree;
            first = false;
        }
    }
    Mask without = live;
    without.reset(pick);
    Mask with = live & ~adj[pick];
    with.reset(pick);
    return std::max(branch_alpha_rec(adj, without), 1 + branch_alpha_rec(adj, with));
}

}  // namespace

std::size_t branch_alpha(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > 128)
        throw std::length_error("branch_alpha: n too large");
    std::vector<Mask> adj(n);
    Mask live;
    for (Vertex v = 0; v < n; ++v) {
        live.set(v);
        for (Vertex w : g.neighbors(v))
            adj[v].set(w);
    }
    return branch_alpha_rec(adj, live);
}

Fraction weighted_alpha(const Graph& g, const std::vector<Fraction>& w)
{
    const std::size_t n = g.num_vertices();
    if (n > 20)
        throw std::length_error("weighted_alpha: n too large");
    const auto a = adjacency_matrix(g);
    Fraction best{0, 1};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!subset_independent(a, mask))
            continue;
        Fraction total{0, 1};
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                total = add(total, w[i]);
        if (best < total)
            best = total;
    }
    return best;
}

bool exhaustive_k_colorable(const Graph& g, std::size_t k)
{
    const std::size_t n = g.num_vertices();
    if (n == 0)
        return true;
    if (k == 0)
        return false;
    const auto edges = g.edges();
    std::vector<std::size_t> c(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : edges)
            if (c[u] == c[v]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        std::size_t i = 1;
        while (i < n && ++c[i] == k) {
            c[i] = 0;
            ++i;
        }
        if (i >= n)
            return false;
    }
}

std::size_t exhaustive_chromatic(const Graph& g)
{
    std::size_t k = 0;
    while (!exhaustive_k_colorable(g, k))
        ++k;
    return k;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (u(gen) < p)
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph star(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph wheel(std::size_t rim)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= rim; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(v, v == rim ? 1 : v + 1);
    }
    return Graph(rim + 1, edges);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            edges.emplace_back(i, static_cast<Vertex>(a + j));
    return Graph(a + b, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    auto edges = a.edges();
    const auto shift = static_cast<Vertex>(a.num_vertices());
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph(a.num_vertices() + b.num_vertices(), edges);
}

bool is_proper(const Graph& g, const trichrome::Coloring& c)
{
    if (c.assignment.size() != g.num_vertices())
        return false;
    for (auto col : c.assignment)
        if (col < 0)
            return false;
    for (const auto& [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v])
            return false;
    return true;
}

std::string fixture_path(const std::string& name)
{
    return (std::filesystem::path(TRICHROME_TEST_DATA_DIR) / "fixtures" / name).string();
}

std::string check_golden(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::path(TRICHROME_TEST_DATA_DIR) / "golden" / name;
    const char* update = std::getenv("TRICHROME_UPDATE_GOLDEN");
    if (update != nullptr && std::string(update) == "1") {
        std::filesystem::create_directories(path.parent_path());
        std::ofstream(path, std::ios::binary) << text;
        return {};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return "missing golden file " + path.string() + " (rerun with TRICHROME_UPDATE_GOLDEN=1)";
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str() != text)
        return "golden mismatch for " + name + "\n--- expected ---\n" + buffer.str() + "\n--- actual ---\n" + text;
    return {};
}

}  // namespace support
