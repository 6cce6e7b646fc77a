#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trichrome/graph.hpp"
#include "trichrome/triangles.hpp"

namespace trichrome::detail {

/// Host graph with a shrinking alive set. Degrees and per-vertex triangle
/// counts are kept current under single-vertex deletion; remove_peel()
/// additionally rebuilds the counts from scratch and checks them against the
/// incremental state.
class ResidualGraph {
public:
    explicit ResidualGraph(const Graph& host);
    /// Starts from the subgraph induced by `alive` only.
    ResidualGraph(const Graph& host, const VertexSet& alive);

    const Graph& host() const noexcept { return *host_; }
    bool alive(Vertex v) const noexcept { return alive_[v] != 0; }
    std::size_t size() const noexcept { return alive_count_; }
    bool empty() const noexcept { return alive_count_ == 0; }

    std::size_t degree(Vertex v) const noexcept { return degree_[v]; }
    std::uint64_t triangles(Vertex v) const noexcept { return triangles_[v]; }
    std::uint64_t total_triangles() const noexcept { return total_; }
    std::uint64_t local_bound() const noexcept;
    std::size_t edges() const noexcept { return edges_; }
    std::size_t max_degree() const noexcept;

    /// Alive neighbors of v in ascending id order.
    std::vector<Vertex> neighbors(Vertex v) const;
    VertexSet vertices() const;

    /// Deletes one vertex, updating counts incrementally.
    void remove(Vertex v);

    /// Deletes an independent set that was extracted as a color class, then
    /// recounts all triangles from scratch. Throws InvariantViolation if the
    /// recount disagrees with the incremental counts.
    void remove_peel(std::span<const Vertex> set);

    /// Fresh triangle statistics of the alive subgraph, in host ids
    /// (dead vertices report 0).
    TriangleStats recount() const;

private:
    void initialize_counts();

    const Graph* host_;
    std::vector<char> alive_;
    std::vector<std::size_t> degree_;
    std::vector<std::uint64_t> triangles_;
    std::size_t alive_count_ = 0;
    std::size_t edges_ = 0;
    std::uint64_t total_ = 0;
};

}  // namespace trichrome::detail
