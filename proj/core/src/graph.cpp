#include "trichrome/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "trichrome/errors.hpp"

namespace trichrome {

Graph::Graph(std::size_t n, std::span<const Edge> edges)
{
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw RangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint >= n = " +
                             std::to_string(n));
        if (u == v)
            throw PreconditionError("self-loop on vertex " + std::to_string(u));
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    offsets_.assign(n + 1, 0);
    for (auto [u, v] : normalized) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i)
        offsets_[i + 1] += offsets_[i];

    neighbors_.resize(2 * normalized.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v): every list receives its lower neighbors
    // first and its higher neighbors after, both ascending.
    for (auto [u, v] : normalized) {
        neighbors_[cursor[u]++] = v;
        neighbors_[cursor[v]++] = u;
    }
}

Graph Graph::complete(std::size_t n)
{
    std::vector<Edge> e;
    e.reserve(n * (n ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

Graph Graph::cycle(std::size_t n)
{
    std::vector<Edge> e;
    if (n >= 3)
        for (Vertex u = 0; u < n; ++u)
            e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
    return Graph(n, e);
}

std::size_t Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (Vertex v = 0; v < num_vertices(); ++v)
        best = std::max(best, degree(v));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept
{
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= universe_)
        throw RangeError("vertex " + std::to_string(members_.back()) + " outside universe of size " +
                         std::to_string(universe_));
}

VertexSet VertexSet::all(std::size_t universe)
{
    std::vector<Vertex> m(universe);
    for (std::size_t v = 0; v < universe; ++v)
        m[v] = static_cast<Vertex>(v);
    return VertexSet(universe, std::move(m));
}

bool VertexSet::contains(Vertex v) const noexcept
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.num_vertices())
        throw PreconditionError("vertex set universe does not match graph");
    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> to_local(g.num_vertices(), absent);
    for (std::size_t i = 0; i < s.size(); ++i)
        to_local[s[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Vertex u = s[i];
        for (Vertex w : g.neighbors(u))
            if (u < w && to_local[w] != absent)
                edges.emplace_back(static_cast<Vertex>(i), to_local[w]);
    }
    return {Graph(s.size(), edges), std::vector<Vertex>(s.begin(), s.end())};
}

std::size_t DegeneracyOrder::back_degree(const Graph& g, Vertex v) const
{
    std::size_t count = 0;
    for (Vertex w : g.neighbors(v))
        if (position[w] > position[v])
            ++count;
    return count;
}

DegeneracyOrder degeneracy_order(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    DegeneracyOrder result;
    result.order.reserve(n);
    result.position.assign(n, 0);

    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    using Key = std::pair<std::size_t, Vertex>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != deg[v])
            continue;  // stale entry
        removed[v] = 1;
        result.position[v] = result.order.size();
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, d);
        for (Vertex w : g.neighbors(v))
            if (!removed[w])
                heap.emplace(--deg[w], w);
    }
    return result;
}

VertexSet d_core(const Graph& g, std::size_t d)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < d) {
            removed[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.back();
        queue.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (removed[w])
                continue;
            if (--deg[w] < d) {
                removed[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v])
            keep.push_back(v);
    return VertexSet(n, std::move(keep));
}

}  // namespace trichrome
