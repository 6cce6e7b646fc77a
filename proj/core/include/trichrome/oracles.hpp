#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trichrome/coloring.hpp"
#include "trichrome/graph.hpp"

namespace trichrome {

// Brute-force ground truth for small graphs. Every oracle has a hard size
// guard and throws SizeGuardError past it rather than running forever.

struct VerifyResult {
    bool proper = true;
    /// First monochromatic edge (u < v) in lexicographic order, if any.
    std::optional<Edge> violation;
};

/// Throws PreconditionError if the assignment is not total over g.
VerifyResult verify_proper(const Graph& g, const Coloring& c);

/// Exact reduced fraction with 64-bit parts.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    friend bool operator==(const Fraction&, const Fraction&) = default;
    /// Exact comparison by cross multiplication in 128-bit arithmetic.
    friend bool operator<(const Fraction& a, const Fraction& b) noexcept;
    friend bool operator<=(const Fraction& a, const Fraction& b) noexcept { return !(b < a); }
};

inline constexpr std::size_t kExactChromaticLimit = 16;
inline constexpr std::size_t kFractionalChromaticLimit = 16;
inline constexpr std::size_t kHallRatioLimit = 14;

/// Chromatic number by branch and bound between a clique lower bound and a
/// DSatur upper bound. Guard n <= 16.
std::size_t exact_chromatic(const Graph& g);

struct FractionalResult {
    Fraction value;
    /// Maximal independent sets with positive weight in the optimal cover.
    std::vector<std::vector<Vertex>> support;
    std::vector<Fraction> support_weights;
    /// Optimal vertex weights w with w(V) = value and alpha(G, w) = 1.
    std::vector<Fraction> dual_weights;
};

/// Fractional chromatic number: min sum x_I subject to sum_{I ∋ v} x_I >= 1
/// over maximal independent sets, solved exactly (rational simplex on the
/// dual with Bland's rule). Guard n <= 16.
FractionalResult fractional_chromatic(const Graph& g);

struct HallRatioResult {
    Fraction value;
    std::vector<Vertex> witness;
};

/// max over nonempty U of |U| / alpha(G[U]) by subset enumeration. Guard n <= 14.
HallRatioResult hall_ratio(const Graph& g);

/// All maximal independent sets as vertex lists (Bron–Kerbosch with pivoting
/// on the complement). Guard n <= 40.
std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g);

}  // namespace trichrome
