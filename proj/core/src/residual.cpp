#include "residual.hpp"

#include <algorithm>
#include <string>

#include "trichrome/errors.hpp"

namespace trichrome::detail {

ResidualGraph::ResidualGraph(const Graph& host) : ResidualGraph(host, VertexSet::all(host.num_vertices())) {}

ResidualGraph::ResidualGraph(const Graph& host, const VertexSet& alive)
    : host_(&host), alive_(host.num_vertices(), 0), degree_(host.num_vertices(), 0),
      triangles_(host.num_vertices(), 0)
{
    for (Vertex v : alive)
        alive_[v] = 1;
    alive_count_ = alive.size();
    initialize_counts();
}

void ResidualGraph::initialize_counts()
{
    const std::size_t n = host_->num_vertices();
    edges_ = 0;
    for (Vertex v = 0; v < n; ++v) {
        degree_[v] = 0;
        if (!alive_[v])
            continue;
        for (Vertex w : host_->neighbors(v))
            degree_[v] += alive_[w];
        edges_ += degree_[v];
    }
    edges_ /= 2;
    auto stats = recount();
    triangles_ = std::move(stats.per_vertex);
    total_ = stats.total;
}

std::uint64_t ResidualGraph::local_bound() const noexcept
{
    std::uint64_t best = 0;
    for (std::size_t v = 0; v < triangles_.size(); ++v)
        if (alive_[v])
            best = std::max(best, triangles_[v]);
    return best;
}

std::size_t ResidualGraph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < degree_.size(); ++v)
        if (alive_[v])
            best = std::max(best, degree_[v]);
    return best;
}

std::vector<Vertex> ResidualGraph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    for (Vertex w : host_->neighbors(v))
        if (alive_[w])
            out.push_back(w);
    return out;
}

VertexSet ResidualGraph::vertices() const
{
    std::vector<Vertex> members;
    members.reserve(alive_count_);
    for (Vertex v = 0; v < alive_.size(); ++v)
        if (alive_[v])
            members.push_back(v);
    return VertexSet(alive_.size(), std::move(members));
}

void ResidualGraph::remove(Vertex v)
{
    if (!alive_[v])
        throw InvariantViolation("removing dead vertex " + std::to_string(v));
    const auto nv = host_->neighbors(v);
    for (Vertex u : nv) {
        if (!alive_[u])
            continue;
        // Triangles v-u-w with w alive: each one loses one from u's count.
        std::uint64_t common = 0;
        const auto nu = host_->neighbors(u);
        auto i = nu.begin();
        auto j = nv.begin();
        while (i != nu.end() && j != nv.end()) {
            if (*i < *j) {
                ++i;
            } else if (*j < *i) {
                ++j;
            } else {
                common += alive_[*i];
                ++i;
                ++j;
            }
        }
        triangles_[u] -= common;
        --degree_[u];
        --edges_;
    }
    total_ -= triangles_[v];
    triangles_[v] = 0;
    degree_[v] = 0;
    alive_[v] = 0;
    --alive_count_;
}

void ResidualGraph::remove_peel(std::span<const Vertex> set)
{
    for (Vertex v : set)
        remove(v);
    const auto fresh = recount();
    if (fresh.total != total_ || fresh.per_vertex != triangles_)
        throw InvariantViolation("incremental triangle counts diverged from recount after peel");
}

TriangleStats ResidualGraph::recount() const
{
    const auto sub = induced_subgraph(*host_, vertices());
    const auto local = count_triangles(sub.graph);
    TriangleStats stats;
    stats.per_vertex.assign(host_->num_vertices(), 0);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i)
        stats.per_vertex[sub.to_host[i]] = local.per_vertex[i];
    stats.total = local.total;
    stats.local_bound = local.local_bound;
    return stats;
}

}  // namespace trichrome::detail
