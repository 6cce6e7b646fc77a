#include "trichrome/independent_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>

#include "trichrome/errors.hpp"
#include "trichrome/rng.hpp"
#include "trichrome/triangles.hpp"

namespace trichrome {

std::size_t turan_floor(std::size_t n, std::size_t m) noexcept
{
    if (n == 0)
        return 0;
    const unsigned __int128 num = static_cast<unsigned __int128>(n) * n;
    const unsigned __int128 den = 2 * static_cast<unsigned __int128>(m) + n;
    return static_cast<std::size_t>((num + den - 1) / den);
}

namespace {

std::vector<Vertex> greedy_min_degree(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> deg(n);
    std::vector<char> gone(n, 0);
    using Key = std::pair<std::size_t, Vertex>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    std::vector<Vertex> chosen;
    auto drop = [&](Vertex w) {
        gone[w] = 1;
        for (Vertex x : g.neighbors(w))
            if (!gone[x])
                heap.emplace(--deg[x], x);
    };
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (gone[v] || d != deg[v])
            continue;
        chosen.push_back(v);
        gone[v] = 1;
        for (Vertex w : g.neighbors(v))
            if (!gone[w])
                drop(w);
    }
    return chosen;
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (w > v && s.contains(w))
                return false;
    return true;
}

IndependentSet turan_independent_set(const Graph& g)
{
    if (g.num_vertices() == 0)
        throw PreconditionError("turan_independent_set requires n >= 1");
    IndependentSet out;
    out.members = VertexSet(g.num_vertices(), greedy_min_degree(g));
    out.certified_floor = turan_floor(g.num_vertices(), g.num_edges());
    return out;
}

IndependentSet neighborhood_turan(const Graph& g, Vertex v, const VertexSet& restrict)
{
    std::vector<Vertex> nb;
    for (Vertex w : g.neighbors(v))
        if (restrict.contains(w))
            nb.push_back(w);
    IndependentSet out;
    out.members = VertexSet(g.num_vertices(), {});
    if (nb.empty())
        return out;
    const auto sub = induced_subgraph(g, VertexSet(g.num_vertices(), std::move(nb)));
    auto local = greedy_min_degree(sub.graph);
    for (auto& u : local)
        u = sub.to_host[u];
    out.members = VertexSet(g.num_vertices(), std::move(local));
    out.certified_floor = turan_floor(sub.graph.num_vertices(), sub.graph.num_edges());
    return out;
}

SparsifiedSample sparsified_sample(const Graph& g, const DegeneracyOrder& orientation, std::uint64_t d,
                                   std::uint64_t y, std::uint64_t seed, const SparsifyConstants& constants)
{
    if (y == 0)
        throw PreconditionError("sparsified_sample requires y >= 1");
    if (orientation.position.size() != g.num_vertices())
        throw PreconditionError("orientation does not belong to this graph");
    const std::size_t n = g.num_vertices();
    const double root_y = std::sqrt(static_cast<double>(y));

    SparsifiedSample out;
    out.probability = std::min(1.0, constants.sample_scale / root_y);
    out.out_degree_cap = static_cast<double>(d) / root_y;

    Rng rng(seed);
    std::vector<char> in_u(n, 0);
    std::vector<Vertex> sampled;
    for (Vertex v = 0; v < n; ++v)
        if (rng.bernoulli(out.probability)) {
            in_u[v] = 1;
            sampled.push_back(v);
        }
    out.sampled = VertexSet(n, sampled);

    const auto gu = induced_subgraph(g, out.sampled);
    const auto tri = count_triangles(gu.graph);
    std::vector<Vertex> survivors;
    for (std::size_t i = 0; i < sampled.size(); ++i) {
        const Vertex v = sampled[i];
        if (tri.per_vertex[i] > 0)
            continue;
        std::size_t out_deg = 0;
        for (Vertex w : g.neighbors(v))
            if (in_u[w] && orientation.position[w] > orientation.position[v])
                ++out_deg;
        if (static_cast<double>(out_deg) > out.out_degree_cap)
            continue;
        survivors.push_back(v);
    }
    out.survivors = VertexSet(n, survivors);

    const auto gw = induced_subgraph(g, out.survivors);
    if (count_triangles(gw.graph).total != 0)
        throw InvariantViolation("sparsified survivors still span a triangle");

    std::vector<Vertex> order(gw.graph.num_vertices());
    for (Vertex i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return gw.graph.degree(a) < gw.graph.degree(b); });
    std::vector<char> blocked(order.size(), 0);
    std::vector<Vertex> chosen;
    for (Vertex i : order) {
        if (blocked[i])
            continue;
        chosen.push_back(gw.to_host[i]);
        for (Vertex w : gw.graph.neighbors(i))
            blocked[w] = 1;
    }
    out.set.members = VertexSet(n, std::move(chosen));
    out.set.certified_floor = 0;
    return out;
}

namespace {

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    std::vector<Vertex> run(std::uint64_t candidates)
    {
        std::vector<Vertex> current;
        expand(candidates, current);
        return best_;
    }

private:
    void expand(std::uint64_t candidates, std::vector<Vertex>& current)
    {
        if (candidates == 0) {
            if (current.size() > best_.size())
                best_ = current;
            return;
        }
        // Greedy coloring of the candidates; a vertex's color bounds the
        // clique size reachable from it.
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        std::uint64_t uncolored = candidates;
        std::size_t color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t open = uncolored;
            while (open) {
                const auto v = static_cast<Vertex>(std::countr_zero(open));
                open &= ~(std::uint64_t{1} << v);
                open &= ~adj_[v];
                uncolored &= ~(std::uint64_t{1} << v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size())
                return;
            const Vertex v = order[i];
            current.push_back(v);
            expand(candidates & adj_[v], current);
            current.pop_back();
            candidates &= ~(std::uint64_t{1} << v);
        }
    }

    std::vector<std::uint64_t> adj_;
    std::vector<Vertex> best_;
};

}  // namespace

IndependentSet exact_max_independent_set(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > kExactIndependentSetLimit)
        throw SizeGuardError("exact_max_independent_set", n, kExactIndependentSetLimit);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> complement(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t nb = 0;
        for (Vertex w : g.neighbors(v))
            nb |= std::uint64_t{1} << w;
        complement[v] = full & ~nb & ~(std::uint64_t{1} << v);
    }
    auto best = MaxCliqueSearch(std::move(complement)).run(full);
    IndependentSet out;
    out.certified_floor = best.size();
    out.members = VertexSet(n, std::move(best));
    return out;
}

}  // namespace trichrome
