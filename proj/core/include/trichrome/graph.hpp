#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace trichrome {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed sparse row form with every neighbor list
/// sorted ascending. A Graph never changes after construction, so it can be
/// shared freely between threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Reversed and repeated pairs collapse
    /// to a single edge. Throws PreconditionError on a self-loop and
    /// RangeError on an endpoint >= n.
    Graph(std::size_t n, std::span<const Edge> edges);

    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph empty(std::size_t n) { return Graph(n, {}); }

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const noexcept;

    /// Binary search in the sorted neighbor list of the lower-degree endpoint.
    bool adjacent(Vertex u, Vertex v) const noexcept;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> neighbors_;
};

/// Sorted, duplicate-free subset of a host graph's vertices.
class VertexSet {
public:
    VertexSet() = default;

    /// Sorts and deduplicates `members`. Throws RangeError if any id >= universe.
    VertexSet(std::size_t universe, std::vector<Vertex> members);

    static VertexSet all(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const noexcept;

    std::span<const Vertex> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    Vertex operator[](std::size_t i) const noexcept { return members_[i]; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<Vertex> members_;
};

/// Induced subgraph together with the id translation in both directions.
struct InducedSubgraph {
    Graph graph;
    /// to_host[new_id] = old id. Ascending, so relative order is preserved.
    std::vector<Vertex> to_host;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct DegeneracyOrder {
    /// Vertices in removal sequence (repeated minimum-degree deletion).
    std::vector<Vertex> order;
    /// position[v] = index of v in `order`.
    std::vector<std::size_t> position;
    std::size_t degeneracy = 0;

    /// Number of neighbors of v that come after v in the order. Orienting
    /// each edge from earlier to later gives out-degree <= degeneracy.
    std::size_t back_degree(const Graph& g, Vertex v) const;
};

/// Minimum-degree elimination order. Ties go to the lowest vertex id.
DegeneracyOrder degeneracy_order(const Graph& g);

/// The unique maximal vertex set inducing minimum degree >= d (the d-core).
VertexSet d_core(const Graph& g, std::size_t d);

}  // namespace trichrome
