#pragma once

#include <cstdint>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

struct TriangleStats {
    /// per_vertex[v] = number of edges inside N(v), i.e. triangles through v.
    std::vector<std::uint64_t> per_vertex;
    /// Global triangle count; equals sum(per_vertex) / 3.
    std::uint64_t total = 0;
    /// Local triangle bound: max over per_vertex (0 for triangle-free graphs).
    std::uint64_t local_bound = 0;

    /// local_bound with 0 raised to 1, for formulas that divide by y or take log(./y).
    std::uint64_t clamped_local_bound() const noexcept { return local_bound == 0 ? 1 : local_bound; }
};

/// Exact counts by sorted-list intersection along a degree orientation.
/// Each triangle is found once and credited to its three corners.
TriangleStats count_triangles(const Graph& g);

/// Vertices grouped by floor(log2(a_v)).
struct TriangleBuckets {
    /// Vertices with a_v = 0.
    VertexSet zero;
    /// by_level[i] holds the vertices with 2^i <= a_v < 2^(i+1).
    std::vector<VertexSet> by_level;
    /// level_of[v] = i for bucketed vertices, -1 for the zero bucket.
    std::vector<int> level_of;
};

TriangleBuckets triangle_bucket_partition(const TriangleStats& stats);

}  // namespace trichrome
