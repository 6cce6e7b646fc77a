#include "trichrome/triangles.hpp"

#include <algorithm>
#include <bit>

namespace trichrome {

TriangleStats count_triangles(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    TriangleStats stats;
    stats.per_vertex.assign(n, 0);

    // Orient u -> v when (deg u, u) < (deg v, v); out-lists have length O(sqrt m).
    auto before = [&](Vertex a, Vertex b) {
        const auto da = g.degree(a), db = g.degree(b);
        return da < db || (da == db && a < b);
    };
    std::vector<std::vector<Vertex>> out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (before(u, v))
                out[u].push_back(v);

    // mark[w] == u + 1 iff w is an out-neighbor of u.
    std::vector<Vertex> mark(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex w : out[u])
            mark[w] = u + 1;
        for (Vertex v : out[u])
            for (Vertex w : out[v])
                if (mark[w] == u + 1) {
                    ++stats.per_vertex[u];
                    ++stats.per_vertex[v];
                    ++stats.per_vertex[w];
                    ++stats.total;
                }
    }
    for (auto a : stats.per_vertex)
        stats.local_bound = std::max(stats.local_bound, a);
    return stats;
}

TriangleBuckets triangle_bucket_partition(const TriangleStats& stats)
{
    const std::size_t n = stats.per_vertex.size();
    TriangleBuckets buckets;
    buckets.level_of.assign(n, -1);
    std::vector<Vertex> zero;
    std::vector<std::vector<Vertex>> levels;
    for (Vertex v = 0; v < n; ++v) {
        const auto a = stats.per_vertex[v];
        if (a == 0) {
            zero.push_back(v);
            continue;
        }
        const int level = std::bit_width(a) - 1;
        if (static_cast<std::size_t>(level) >= levels.size())
            levels.resize(static_cast<std::size_t>(level) + 1);
        levels[level].push_back(v);
        buckets.level_of[v] = level;
    }
    buckets.zero = VertexSet(n, std::move(zero));
    for (auto& members : levels)
        buckets.by_level.emplace_back(n, std::move(members));
    return buckets;
}

}  // namespace trichrome
