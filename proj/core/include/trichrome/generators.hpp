#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

enum class Family { gnp, triangle_free_process, clique, blow_up, lb_nyt, lb_myt };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view name);

/// Parameters for every family; each family reads only the fields it needs.
///   gnp                    n, p
///   triangle_free_process  n
///   clique                 n
///   blow_up                k (base process graph size), i
///   lb_nyt                 n, y, t
///   lb_myt                 m, y, t
struct GenSpec {
    Family family = Family::gnp;
    std::uint64_t n = 0;
    double p = 0.0;
    std::uint64_t k = 0;
    std::uint64_t i = 1;
    std::uint64_t y = 0;
    std::uint64_t t = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
};

struct Measured {
    std::uint64_t n = 0, m = 0, t = 0, y = 0;
    std::uint64_t max_degree = 0;
    /// Exact independence number, filled when n is within the oracle guard.
    std::optional<std::uint64_t> alpha;
};

/// Measures a graph. Exact alpha is computed when n <= alpha_limit.
Measured measure(const Graph& g, std::size_t alpha_limit = 40);

struct CertifiedInstance {
    Graph graph;
    GenSpec spec;
    /// Always recomputed from `graph`.
    Measured certificate;
    /// Intended profile of the construction (branch parameters, targets).
    std::vector<std::pair<std::string, double>> target;
    std::vector<std::string> notes;
};

/// Thrown when a lower-bound recipe's rounded parameters overshoot a hard
/// target (e.g. more than m edges).
class ConstructionInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CertifiedInstance gen_gnp(std::uint64_t n, double p, std::uint64_t seed);

/// Random triangle-free process: all pairs in random order, each inserted
/// unless it closes a triangle.
CertifiedInstance gen_triangle_free_process(std::uint64_t n, std::uint64_t seed);

CertifiedInstance gen_clique(std::uint64_t n);

/// Replaces every base vertex by an i-clique and every base edge by the
/// complete bipartite join of the two cliques. Vertex (x, a) becomes x*i + a.
/// Throws PreconditionError if base has a triangle or i == 0.
CertifiedInstance blow_up(const Graph& base, std::uint64_t i);

/// Instance with few vertices, triangles and local count but large chromatic
/// number, chosen among clique / process graph / blow-up by (n, y, t).
/// Throws FeasibilityError unless y <= n^2 and t <= n y.
CertifiedInstance lower_bound_instance_nyt(std::uint64_t n, std::uint64_t y, std::uint64_t t, std::uint64_t seed);

/// Edge-count analogue. Throws FeasibilityError unless y <= m and t^2 <= m^2 y;
/// throws ConstructionInfeasible if the rounded construction exceeds m edges.
CertifiedInstance lower_bound_instance_myt(std::uint64_t m, std::uint64_t y, std::uint64_t t, std::uint64_t seed);

/// Dispatches on spec.family.
CertifiedInstance generate(const GenSpec& spec);

}  // namespace trichrome
