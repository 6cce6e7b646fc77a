#include "trichrome/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "trichrome/errors.hpp"
#include "trichrome/independent_set.hpp"

namespace trichrome {

namespace {

using Mask = std::uint64_t;
using Rational = boost::multiprecision::cpp_rational;

Mask bit(std::size_t v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g)
{
    std::vector<Mask> adj(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w : g.neighbors(v))
            adj[v] |= bit(w);
    return adj;
}

Fraction make_fraction(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

Fraction to_fraction(const Rational& r)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return make_fraction(numerator(r).convert_to<std::int64_t>(), denominator(r).convert_to<std::int64_t>());
}

std::vector<Vertex> mask_members(Mask m)
{
    std::vector<Vertex> out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

std::size_t max_clique_size(const std::vector<Mask>& adj, Mask candidates, std::size_t current, std::size_t best)
{
    if (candidates == 0)
        return std::max(best, current);
    if (current + static_cast<std::size_t>(std::popcount(candidates)) <= best)
        return best;
    while (candidates) {
        if (current + static_cast<std::size_t>(std::popcount(candidates)) <= best)
            break;
        const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= ~bit(v);
        best = max_clique_size(adj, candidates & adj[v], current + 1, best);
    }
    return std::max(best, current);
}

/// DSatur: colors the vertex with the most distinct neighbor colors next.
std::vector<int> dsatur(const std::vector<Mask>& adj)
{
    const std::size_t n = adj.size();
    std::vector<int> color(n, -1);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        int best_sat = -1, best_deg = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            Mask seen = 0;
            for (auto w : mask_members(adj[v]))
                if (color[w] >= 0)
                    seen |= bit(static_cast<std::size_t>(color[w]));
            const int sat = std::popcount(seen);
            const int deg = std::popcount(adj[v]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        Mask used = 0;
        for (auto w : mask_members(adj[pick]))
            if (color[w] >= 0)
                used |= bit(static_cast<std::size_t>(color[w]));
        color[pick] = std::countr_one(used);
    }
    return color;
}

class KColoring {
public:
    KColoring(const std::vector<Mask>& adj, int k) : adj_(adj), k_(k), color_(adj.size(), -1) {}

    bool run() { return extend(0, 0); }

private:
    bool extend(std::size_t colored, int used)
    {
        const std::size_t n = adj_.size();
        if (colored == n)
            return true;
        std::size_t pick = n;
        int best_sat = -1;
        Mask pick_forbidden = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color_[v] >= 0)
                continue;
            Mask forbidden = 0;
            for (auto w : mask_members(adj_[v]))
                if (color_[w] >= 0)
                    forbidden |= bit(static_cast<std::size_t>(color_[w]));
            const int sat = std::popcount(forbidden);
            if (sat > best_sat) {
                best_sat = sat;
                pick = v;
                pick_forbidden = forbidden;
            }
        }
        // Colors above `used` are interchangeable, so only the first new one is tried.
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (pick_forbidden & bit(static_cast<std::size_t>(c)))
                continue;
            color_[pick] = c;
            if (extend(colored + 1, std::max(used, c + 1)))
                return true;
        }
        color_[pick] = -1;
        return false;
    }

    const std::vector<Mask>& adj_;
    int k_;
    std::vector<int> color_;
};

/// Dictionary simplex for max c.x s.t. A x <= 1, x >= 0 with exact rationals
/// and Bland's rule. Returns (optimum, primal x, dual y).
struct SimplexResult {
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
};

SimplexResult simplex_unit_rhs(const std::vector<std::vector<int>>& a, std::size_t cols)
{
    const std::size_t rows = a.size();
    const std::size_t width = cols + rows;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width + 1, 0));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            t[i][j] = a[i][j];
        t[i][cols + i] = 1;
        t[i][width] = 1;
        basis[i] = cols + i;
    }
    std::vector<Rational> reduced(width + 1, 0);
    for (std::size_t j = 0; j < cols; ++j)
        reduced[j] = 1;

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j)
            if (reduced[j] > 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0)
                continue;
            const Rational ratio = t[i][width] / t[i][enter];
            if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows)
            throw InvariantViolation("fractional chromatic LP reported unbounded");
        const Rational pivot = t[leave][enter];
        for (auto& x : t[leave])
            x /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational factor = t[i][enter];
            for (std::size_t j = 0; j <= width; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= factor * t[leave][j];
        }
        const Rational factor = reduced[enter];
        for (std::size_t j = 0; j <= width; ++j)
            if (t[leave][j] != 0)
                reduced[j] -= factor * t[leave][j];
        basis[leave] = enter;
    }

    SimplexResult out;
    out.value = -reduced[width];
    out.primal.assign(cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < cols)
            out.primal[basis[i]] = t[i][width];
    out.dual.resize(rows);
    for (std::size_t i = 0; i < rows; ++i)
        out.dual[i] = -reduced[cols + i];
    return out;
}

}  // namespace

std::string Fraction::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Fraction& a, const Fraction& b) noexcept
{
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

VerifyResult verify_proper(const Graph& g, const Coloring& c)
{
    if (c.assignment.size() != g.num_vertices())
        throw PreconditionError("coloring covers " + std::to_string(c.assignment.size()) + " vertices, graph has " +
                                std::to_string(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (c.assignment[v] < 0)
            throw PreconditionError("vertex " + std::to_string(v) + " is uncolored");
    VerifyResult out;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v : g.neighbors(u))
            if (v > u && c.assignment[u] == c.assignment[v]) {
                out.proper = false;
                out.violation = Edge{u, v};
                return out;
            }
    return out;
}

std::size_t exact_chromatic(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > kExactChromaticLimit)
        throw SizeGuardError("exact_chromatic", n, kExactChromaticLimit);
    if (n == 0)
        return 0;
    const auto adj = adjacency_masks(g);
    const std::size_t lower = max_clique_size(adj, bit(n) - 1, 0, 0);
    const auto greedy = dsatur(adj);
    const auto upper = static_cast<std::size_t>(*std::max_element(greedy.begin(), greedy.end()) + 1);
    for (std::size_t k = lower; k < upper; ++k)
        if (KColoring(adj, static_cast<int>(k)).run())
            return k;
    return upper;
}

std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > kExactIndependentSetLimit)
        throw SizeGuardError("maximal_independent_sets", n, kExactIndependentSetLimit);
    std::vector<std::vector<Vertex>> out;
    if (n == 0)
        return out;
    const Mask full = n == 64 ? ~Mask{0} : bit(n) - 1;
    const auto adj = adjacency_masks(g);
    std::vector<Mask> comp(n);
    for (std::size_t v = 0; v < n; ++v)
        comp[v] = full & ~adj[v] & ~bit(v);

    // Bron–Kerbosch with Tomita pivoting on the complement graph.
    auto recurse = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
        if (p == 0 && x == 0) {
            out.push_back(mask_members(r));
            return;
        }
        Mask px = p | x;
        std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
        int best = -1;
        for (Mask scan = px; scan; scan &= scan - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(scan));
            const int cnt = std::popcount(p & comp[u]);
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        for (Mask todo = p & ~comp[pivot]; todo; todo &= todo - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(todo));
            self(self, r | bit(v), p & comp[v], x & comp[v]);
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    recurse(recurse, 0, full, 0);
    std::sort(out.begin(), out.end());
    return out;
}

FractionalResult fractional_chromatic(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > kFractionalChromaticLimit)
        throw SizeGuardError("fractional_chromatic", n, kFractionalChromaticLimit);
    FractionalResult out;
    if (n == 0)
        return out;
    const auto sets = maximal_independent_sets(g);
    std::vector<std::vector<int>> rows(sets.size(), std::vector<int>(n, 0));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (Vertex v : sets[i])
            rows[i][v] = 1;
    // Dual LP: max w(V) s.t. w(I) <= 1 for every maximal independent set I.
    const auto lp = simplex_unit_rhs(rows, n);
    out.value = to_fraction(lp.value);
    for (const auto& w : lp.primal)
        out.dual_weights.push_back(to_fraction(w));
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (lp.dual[i] > 0) {
            out.support.push_back(sets[i]);
            out.support_weights.push_back(to_fraction(lp.dual[i]));
        }
    return out;
}

HallRatioResult hall_ratio(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > kHallRatioLimit)
        throw SizeGuardError("hall_ratio", n, kHallRatioLimit);
    HallRatioResult out;
    if (n == 0)
        return out;
    const auto adj = adjacency_masks(g);
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::uint8_t> alpha(subsets, 0);
    Fraction best{0, 1};
    Mask witness = 0;
    for (std::size_t s = 1; s < subsets; ++s) {
        const auto v = static_cast<std::size_t>(std::countr_zero(s));
        const Mask without = s & ~bit(v);
        const Mask closed = s & ~adj[v] & ~bit(v);
        alpha[s] = std::max(alpha[without], static_cast<std::uint8_t>(alpha[closed] + 1));
        const Fraction ratio = make_fraction(std::popcount(s), alpha[s]);
        if (best < ratio) {
            best = ratio;
            witness = s;
        }
    }
    out.value = best;
    out.witness = mask_members(witness);
    return out;
}

}  // namespace trichrome
