#include "trichrome/composite.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include "residual.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/rng.hpp"
#include "trichrome/triangles.hpp"

namespace trichrome {

std::size_t RunTrace::peeled_vertices() const noexcept
{
    std::size_t total = 0;
    for (const auto& p : peels)
        total += p.set_size;
    return total;
}

std::size_t RunTrace::residual_vertices() const noexcept
{
    std::size_t total = 0;
    for (const auto& r : residuals)
        total += r.size;
    return total;
}

void RunTrace::absorb(const RunTrace& nested, const std::string& prefix)
{
    for (auto p : nested.parameters) {
        p.algorithm = prefix + p.algorithm;
        parameters.push_back(std::move(p));
    }
    for (const auto& b : nested.branches)
        branches.push_back(prefix + b);
    for (auto p : nested.peels) {
        p.stage = prefix + p.stage;
        peels.push_back(std::move(p));
    }
    for (auto r : nested.residuals) {
        r.stage = prefix + r.stage;
        residuals.push_back(std::move(r));
    }
    for (auto f : nested.fallbacks) {
        f.stage = prefix + f.stage;
        fallbacks.push_back(std::move(f));
    }
    peel_count_checks.insert(peel_count_checks.end(), nested.peel_count_checks.begin(),
                             nested.peel_count_checks.end());
    layered_runs.insert(layered_runs.end(), nested.layered_runs.begin(), nested.layered_runs.end());
    base_runs.insert(base_runs.end(), nested.base_runs.begin(), nested.base_runs.end());
}

namespace {

using detail::ResidualGraph;
using Clock = std::chrono::steady_clock;

// Seed streams for the sub-steps of each algorithm.
enum Stream : std::uint64_t {
    kResidualBase = 1,
    kSplitA,
    kSplitB,
    kLayered,
    kLowerBuckets,
    kSample,
    kCaseThree,
};

std::int64_t floor_int(double z) { return static_cast<std::int64_t>(std::floor(z + 1e-9 * std::max(1.0, z))); }

class Assembler {
public:
    explicit Assembler(std::size_t n) : assignment_(n, kUncolored) {}

    Color fresh() { return next_++; }

    void place(const Coloring& sub, const std::vector<Vertex>& to_host)
    {
        embed_coloring(sub, to_host, next_, assignment_);
        next_ += static_cast<Color>(sub.colors_used);
    }

    void assign(std::span<const Vertex> vs, Color c)
    {
        for (Vertex v : vs)
            assignment_[v] = c;
    }

    Coloring finish() { return normalize_coloring(std::move(assignment_)); }

private:
    std::vector<Color> assignment_;
    Color next_ = 0;
};

template <typename Pred>
VertexSet select(std::size_t n, Pred pred)
{
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
        if (pred(v))
            members.push_back(v);
    return VertexSet(n, std::move(members));
}

std::vector<Vertex> to_host_ids(std::span<const Vertex> local, const std::vector<Vertex>& to_host)
{
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local)
        out.push_back(to_host[v]);
    return out;
}

PeelEvent peel_into(ResidualGraph& r, Assembler& out, std::string stage, std::optional<Vertex> pivot,
                    const IndependentSet& set)
{
    PeelEvent ev;
    ev.stage = std::move(stage);
    ev.pivot = pivot;
    ev.set_size = set.members.size();
    ev.certified_floor = set.certified_floor;
    ev.min_member_triangles = std::numeric_limits<std::uint64_t>::max();
    for (Vertex v : set.members)
        ev.min_member_triangles = std::min(ev.min_member_triangles, r.triangles(v));
    if (set.members.empty())
        ev.min_member_triangles = 0;
    const auto before = r.total_triangles();
    out.assign(set.members.members(), out.fresh());
    r.remove_peel(set.members.members());
    ev.triangles_removed = before - r.total_triangles();
    return ev;
}

/// Colors G[A] and G[V \ A] with separate colorers and disjoint color ranges.
template <typename ColorA, typename ColorB>
ColoringRun split_run(const Graph& g, const VertexSet& a, ColorA&& color_a, ColorB&& color_b, RunTrace trace)
{
    const std::size_t n = g.num_vertices();
    Assembler out(n);
    const VertexSet b = select(n, [&](Vertex v) { return !a.contains(v); });
    trace.branches.push_back("|A| = " + std::to_string(a.size()) + ", |B| = " + std::to_string(b.size()));
    if (!a.empty()) {
        const auto sub = induced_subgraph(g, a);
        const ColoringRun run = color_a(sub.graph);
        out.place(run.coloring, sub.to_host);
        trace.absorb(run.trace, "A/");
    }
    if (!b.empty()) {
        const auto sub = induced_subgraph(g, b);
        const ColoringRun run = color_b(sub.graph);
        out.place(run.coloring, sub.to_host);
        trace.absorb(run.trace, "B/");
    }
    ColoringRun result{out.finish(), std::move(trace)};
    result.trace.colors_used = result.coloring.colors_used;
    return result;
}

/// Runs `fn` on the graph minus its isolated vertices, which then share color 0.
template <typename Fn>
ColoringRun timed(const Graph& g, Fn&& fn)
{
    const auto start = Clock::now();
    const auto busy = select(g.num_vertices(), [&](Vertex v) { return g.degree(v) > 0; });
    ColoringRun run;
    if (busy.empty() || busy.size() == g.num_vertices()) {
        run = fn(g);
    } else {
        const auto sub = induced_subgraph(g, busy);
        run = fn(sub.graph);
        std::vector<Color> assignment(g.num_vertices(), 0);
        for (Vertex i = 0; i < sub.to_host.size(); ++i)
            assignment[sub.to_host[i]] = run.coloring.assignment[i];
        run.coloring = normalize_coloring(std::move(assignment));
        for (auto& p : run.trace.peels)
            if (p.pivot)
                p.pivot = sub.to_host[*p.pivot];
        run.trace.residuals.push_back({"isolated", g.num_vertices() - busy.size(), 0});
    }
    run.trace.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    run.trace.colors_used = run.coloring.colors_used;
    return run;
}

ColoringRun vertex_count_impl(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    const std::size_t n = g.num_vertices();
    RunTrace trace;
    trace.algorithm = "prop0";
    const auto stats = count_triangles(g);
    const auto params = choose_parameters(AlgorithmId::prop0, n, g.num_edges(), stats.total, stats.local_bound);
    const double d = params.real_or("d", 1.0);
    trace.branches.push_back(params.branch);
    trace.parameters.push_back(params);

    ResidualGraph r(g);
    Assembler out(n);
    for (;;) {
        std::optional<Vertex> pivot;
        for (Vertex v = 0; v < n; ++v)
            if (r.alive(v) && static_cast<double>(r.degree(v)) > d) {
                pivot = v;
                break;
            }
        if (!pivot)
            break;
        const auto set = neighborhood_turan(g, *pivot, r.vertices());
        trace.peels.push_back(peel_into(r, out, "degree peel", pivot, set));
    }

    const auto rest = r.vertices();
    if (!rest.empty()) {
        const auto sub = induced_subgraph(g, rest);
        const auto y_res = count_triangles(sub.graph).clamped_local_bound();
        BaseColoringReport report;
        const auto c = color_bounded_triangles(sub.graph, y_res, options.base, mix_seed(seed, kResidualBase), &report);
        out.place(c, sub.to_host);
        trace.base_runs.push_back(report);
        trace.residuals.push_back({"base", rest.size(), c.colors_used});
    }

    PeelCountCheck check;
    check.n = n;
    check.y = stats.clamped_local_bound();
    check.d = d;
    check.peels = trace.peels.size();
    check.bound = d > 0 ? static_cast<double>(n) * (static_cast<double>(check.y) / d + 1.0) / d : 0.0;
    trace.peel_count_checks.push_back(check);
    return {out.finish(), std::move(trace)};
}

struct BucketViolation {
    int i = 0;
    int j = 0;
    Vertex v = 0;
};

/// Smallest (i, j, v) with i >= k, j >= i, v in A_i and |N(v) ∩ A_j| > 2^((i-j)/2) d.
std::optional<BucketViolation> find_bucket_violation(const ResidualGraph& r, const std::vector<int>& level,
                                                     int max_level, std::int64_t k, double d)
{
    const std::size_t n = level.size();
    std::vector<std::vector<Vertex>> by_level(static_cast<std::size_t>(max_level) + 1);
    for (Vertex v = 0; v < n; ++v)
        if (r.alive(v) && level[v] >= 0)
            by_level[level[v]].push_back(v);
    std::vector<std::size_t> hist(by_level.size(), 0);
    const int first = static_cast<int>(std::max<std::int64_t>(k, 0));
    for (int i = first; i <= max_level; ++i) {
        std::optional<BucketViolation> best;
        for (Vertex v : by_level[i]) {
            for (Vertex w : r.host().neighbors(v))
                if (r.alive(w) && level[w] >= i)
                    ++hist[level[w]];
            for (int j = i; j <= max_level; ++j) {
                const double cap = std::pow(2.0, (i - j) / 2.0) * d;
                if (static_cast<double>(hist[j]) > cap) {
                    if (!best || j < best->j)
                        best = BucketViolation{i, j, v};
                    break;
                }
            }
            std::fill(hist.begin() + i, hist.end(), 0);
        }
        if (best)
            return best;
    }
    return std::nullopt;
}

/// The bucketed core: peel cross-bucket violations, layer-color the high
/// buckets, vertex-count-color the rest.
ColoringRun bucket_core(const Graph& h, std::uint64_t seed, const ColoringOptions& options)
{
    const std::size_t n = h.num_vertices();
    RunTrace trace;
    trace.algorithm = "ttprop2-core";
    const auto stats = count_triangles(h);
    const auto params = choose_parameters(AlgorithmId::ttprop2, n, h.num_edges(), stats.total, stats.local_bound);
    const double d = params.real_or("d", 1.0);
    const std::int64_t k = params.integer_or("k", 0);
    trace.parameters.push_back(params);

    ResidualGraph r(h);
    Assembler out(n);
    std::vector<int> level(n, -1);
    int max_level = -1;
    auto relevel = [&] {
        max_level = -1;
        for (Vertex v = 0; v < n; ++v) {
            const auto a = r.alive(v) ? r.triangles(v) : 0;
            level[v] = a == 0 ? -1 : static_cast<int>(std::bit_width(a)) - 1;
            max_level = std::max(max_level, level[v]);
        }
    };
    relevel();
    while (auto hit = find_bucket_violation(r, level, max_level, k, d)) {
        const auto target = select(n, [&](Vertex v) { return r.alive(v) && level[v] == hit->j; });
        const auto set = neighborhood_turan(h, hit->v, target);
        trace.peels.push_back(peel_into(r, out,
                                        "bucket peel i=" + std::to_string(hit->i) + " j=" + std::to_string(hit->j),
                                        hit->v, set));
        relevel();
    }

    const auto upper = select(n, [&](Vertex v) { return r.alive(v) && level[v] > k; });
    const auto lower = select(n, [&](Vertex v) { return r.alive(v) && level[v] <= k; });
    if (!upper.empty()) {
        const auto sub = induced_subgraph(h, upper);
        LayerSpec spec;
        spec.d = d;
        spec.x = std::sqrt(2.0);
        for (int lv = static_cast<int>(k) + 1; lv <= max_level; ++lv) {
            std::vector<Vertex> members;
            for (Vertex i = 0; i < sub.to_host.size(); ++i)
                if (level[sub.to_host[i]] == lv)
                    members.push_back(i);
            spec.layers.emplace_back(sub.graph.num_vertices(), std::move(members));
        }
        if (auto bad = validate_layer_spec(sub.graph, spec))
            throw InvariantViolation("bucket layers violate the cross-layer cap after peeling (layer " +
                                     std::to_string(bad->layer_i) + " -> " + std::to_string(bad->layer_j) + ")");
        const auto y_sub = count_triangles(sub.graph).clamped_local_bound();
        LayeredColoringReport report;
        const auto c = layered_list_color(sub.graph, spec, y_sub, options.base.palette_constant,
                                          mix_seed(seed, kLayered), &report, options.list_restarts);
        out.place(c, sub.to_host);
        trace.layered_runs.push_back(report);
        trace.residuals.push_back({"layered", upper.size(), c.colors_used});
        if (report.fallback_layers > 0)
            trace.fallbacks.push_back({"layered", std::to_string(report.fallback_layers) +
                                                      " layer(s) finished greedily after list-coloring failed"});
    }
    if (!lower.empty()) {
        const auto sub = induced_subgraph(h, lower);
        const auto run = vertex_count_impl(sub.graph, mix_seed(seed, kLowerBuckets), options);
        out.place(run.coloring, sub.to_host);
        trace.absorb(run.trace, "low/");
    }
    const auto bucket_peels = std::count_if(trace.peels.begin(), trace.peels.end(), [](const PeelEvent& p) {
        return p.stage.starts_with("bucket peel");
    });
    trace.branches.push_back("core: " + std::to_string(bucket_peels) + " bucket peel(s), " +
                             std::to_string(upper.size()) + " layered, " + std::to_string(lower.size()) + " low");
    return {out.finish(), std::move(trace)};
}

ColoringRun triangle_buckets_impl(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    RunTrace trace;
    trace.algorithm = "ttprop2";
    const auto stats = count_triangles(g);
    const auto params =
        choose_parameters(AlgorithmId::ttprop2, g.num_vertices(), g.num_edges(), stats.total, stats.local_bound);
    const auto z = static_cast<std::uint64_t>(params.integer_or("triangle_threshold", 1));
    trace.parameters.push_back(params);
    trace.branches.push_back(params.branch);
    const auto a = select(g.num_vertices(), [&](Vertex v) { return stats.per_vertex[v] >= z; });
    return split_run(
        g, a, [&](const Graph& sub) { return vertex_count_impl(sub, mix_seed(seed, kSplitA), options); },
        [&](const Graph& sub) { return bucket_core(sub, mix_seed(seed, kSplitB), options); }, std::move(trace));
}

ColoringRun edge_count_impl(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    RunTrace trace;
    trace.algorithm = "prop0a";
    const auto stats = count_triangles(g);
    const auto params =
        choose_parameters(AlgorithmId::prop0a, g.num_vertices(), g.num_edges(), stats.total, stats.local_bound);
    const auto d = params.integer_or("degree_threshold", 0);
    trace.parameters.push_back(params);
    trace.branches.push_back(params.branch);
    const auto a = select(g.num_vertices(), [&](Vertex v) { return static_cast<std::int64_t>(g.degree(v)) > d; });
    return split_run(
        g, a, [&](const Graph& sub) { return vertex_count_impl(sub, mix_seed(seed, kSplitA), options); },
        [&](const Graph& sub) {
            RunTrace t;
            t.algorithm = "base";
            const auto y = count_triangles(sub).clamped_local_bound();
            BaseColoringReport report;
            auto c = color_bounded_triangles(sub, y, options.base, mix_seed(seed, kSplitB), &report);
            t.base_runs.push_back(report);
            t.residuals.push_back({"base", sub.num_vertices(), c.colors_used});
            return ColoringRun{std::move(c), std::move(t)};
        },
        std::move(trace));
}

ColoringRun edges_and_triangles_impl(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    RunTrace trace;
    trace.algorithm = "ttprop3";
    const auto stats = count_triangles(g);
    const auto params =
        choose_parameters(AlgorithmId::ttprop3, g.num_vertices(), g.num_edges(), stats.total, stats.local_bound);
    const auto z = static_cast<std::uint64_t>(params.integer_or("triangle_threshold", 1));
    trace.parameters.push_back(params);
    trace.branches.push_back(params.branch);
    const auto a = select(g.num_vertices(), [&](Vertex v) { return stats.per_vertex[v] >= z; });
    return split_run(
        g, a, [&](const Graph& sub) { return triangle_buckets_impl(sub, mix_seed(seed, kSplitA), options); },
        [&](const Graph& sub) { return edge_count_impl(sub, mix_seed(seed, kSplitB), options); }, std::move(trace));
}

ColoringRun explicit_constant_impl(const Graph& g, const ColoringOptions& options)
{
    const std::size_t n = g.num_vertices();
    const double coef = options.explicit_sqrt_coefficient;
    RunTrace trace;
    trace.algorithm = "twprop1";
    const auto stats = count_triangles(g);
    trace.parameters.push_back(
        choose_parameters(AlgorithmId::twprop1, n, g.num_edges(), stats.total, stats.local_bound));

    struct Step {
        std::optional<Vertex> pushed;
        std::vector<Vertex> peeled;
    };
    std::vector<Step> steps;
    ResidualGraph r(g);
    std::size_t pushes = 0;
    while (!r.empty()) {
        const double f = coef * std::sqrt(static_cast<double>(r.size())) +
                         std::cbrt(6.0 * static_cast<double>(r.total_triangles()));
        const auto d = static_cast<std::size_t>(std::max<std::int64_t>(floor_int(f), 0));
        std::optional<Vertex> low;
        Vertex pivot = 0;
        std::uint64_t fewest = std::numeric_limits<std::uint64_t>::max();
        for (Vertex v = 0; v < n; ++v) {
            if (!r.alive(v))
                continue;
            if (r.degree(v) < d) {
                low = v;
                break;
            }
            if (r.triangles(v) < fewest) {
                fewest = r.triangles(v);
                pivot = v;
            }
        }
        if (low) {
            r.remove(*low);
            steps.push_back({low, {}});
            ++pushes;
            continue;
        }
        auto nb = r.neighbors(pivot);
        nb.resize(d);
        const auto set = neighborhood_turan(g, pivot, VertexSet(n, std::move(nb)));
        PeelEvent ev;
        ev.stage = "dense peel d=" + std::to_string(d);
        ev.pivot = pivot;
        ev.set_size = set.members.size();
        ev.certified_floor = set.certified_floor;
        ev.min_member_triangles = std::numeric_limits<std::uint64_t>::max();
        for (Vertex v : set.members)
            ev.min_member_triangles = std::min(ev.min_member_triangles, r.triangles(v));
        const auto before = r.total_triangles();
        r.remove_peel(set.members.members());
        ev.triangles_removed = before - r.total_triangles();
        trace.peels.push_back(ev);
        steps.push_back({std::nullopt, {set.members.begin(), set.members.end()}});
    }

    // Unwind: each step is colored after everything removed later, exactly
    // as in the induction.
    std::vector<Color> assignment(n, kUncolored);
    Color top = 0;
    std::vector<char> taken;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (!it->pushed) {
            const Color c = top++;
            for (Vertex v : it->peeled)
                assignment[v] = c;
            continue;
        }
        const Vertex v = *it->pushed;
        taken.assign(static_cast<std::size_t>(top) + 1, 0);
        for (Vertex w : g.neighbors(v))
            if (assignment[w] != kUncolored)
                taken[assignment[w]] = 1;
        Color c = 0;
        while (taken[c])
            ++c;
        assignment[v] = c;
        top = std::max(top, c + 1);
    }
    trace.residuals.push_back({"low-degree greedy", pushes, 0});
    trace.branches.push_back(std::to_string(pushes) + " low-degree removal(s), " + std::to_string(trace.peels.size()) +
                             " dense peel(s)");
    ColoringRun run{normalize_coloring(std::move(assignment)), std::move(trace)};
    const double bound = explicit_constant_bound(n, stats.total, coef);
    if (coef >= 100.0 && static_cast<double>(run.coloring.colors_used) > bound)
        throw InvariantViolation("explicit-constant colorer used " + std::to_string(run.coloring.colors_used) +
                                 " colors, above its bound " + std::to_string(bound));
    return run;
}

ColoringRun hybrid_impl(AlgorithmId id, const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    RunTrace trace;
    trace.algorithm = std::string(to_string(id));
    const auto stats = count_triangles(g);
    const auto params = choose_parameters(id, g.num_vertices(), g.num_edges(), stats.total, stats.local_bound);
    const auto z = static_cast<std::uint64_t>(params.integer_or("triangle_threshold", 1));
    trace.parameters.push_back(params);
    trace.branches.push_back(params.branch);
    const auto a = select(g.num_vertices(), [&](Vertex v) { return stats.per_vertex[v] >= z; });
    return split_run(
        g, a, [&](const Graph& sub) { return explicit_constant_impl(sub, options); },
        [&](const Graph& sub) {
            return id == AlgorithmId::hybrid_n ? triangle_buckets_impl(sub, mix_seed(seed, kSplitB), options)
                                               : edges_and_triangles_impl(sub, mix_seed(seed, kSplitB), options);
        },
        std::move(trace));
}

/// Greedy independent set of G[W] preferring vertices in many residual triangles.
std::vector<Vertex> triangle_weighted_greedy(const ResidualGraph& r, const InducedSubgraph& sub,
                                             const VertexSet& survivors)
{
    std::vector<Vertex> order(survivors.begin(), survivors.end());
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return r.triangles(sub.to_host[a]) > r.triangles(sub.to_host[b]);
    });
    std::vector<char> blocked(sub.graph.num_vertices(), 0);
    std::vector<Vertex> chosen;
    for (Vertex v : order) {
        if (blocked[v])
            continue;
        chosen.push_back(sub.to_host[v]);
        for (Vertex w : sub.graph.neighbors(v))
            blocked[w] = 1;
    }
    return chosen;
}

ColoringRun conjectural_impl(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    const std::size_t n = g.num_vertices();
    RunTrace trace;
    trace.algorithm = "conjectural";
    trace.experimental = true;
    const auto stats = count_triangles(g);
    trace.parameters.push_back(
        choose_parameters(AlgorithmId::conjectural, n, g.num_edges(), stats.total, stats.local_bound));

    ResidualGraph r(g);
    Assembler out(n);
    for (std::uint64_t step = 0; !r.empty(); ++step) {
        const double nr = static_cast<double>(r.size());
        const double tr = static_cast<double>(r.total_triangles());
        const double yr = static_cast<double>(std::max<std::uint64_t>(r.local_bound(), 1));
        const double f = tlog_or_one(tr * tr / (yr * yr * yr));
        const double d = std::cbrt(tr * f) + std::sqrt(nr);
        const auto threshold = static_cast<std::size_t>(floor_int(d));

        const auto alive = r.vertices();
        const auto sub = induced_subgraph(g, alive);
        const auto core = d_core(sub.graph, threshold);
        if (!core.empty()) {
            const auto core_host = to_host_ids(core.members(), sub.to_host);
            Vertex w = core_host.front();
            for (Vertex v : core_host)
                if (r.triangles(v) < r.triangles(w))
                    w = v;
            const double k = static_cast<double>(r.triangles(w));
            trace.branches.push_back(k <= d ? "case I (k <= d)" : "case I (k > d)");
            const auto set = neighborhood_turan(g, w, VertexSet(n, core_host));
            trace.peels.push_back(peel_into(r, out, "case I", w, set));
            continue;
        }
        if (std::sqrt(nr) < std::cbrt(tr * f)) {
            trace.branches.push_back("case II");
            const auto orientation = degeneracy_order(sub.graph);
            std::vector<Vertex> best;
            std::uint64_t best_weight = 0;
            for (std::size_t attempt = 0; attempt < options.conjectural_sample_attempts; ++attempt) {
                const auto sample = sparsified_sample(sub.graph, orientation, threshold,
                                                      static_cast<std::uint64_t>(yr),
                                                      mix_seed(mix_seed(seed, kSample), step * 1024 + attempt),
                                                      options.base.sparsify);
                const auto chosen = triangle_weighted_greedy(r, sub, sample.survivors);
                std::uint64_t weight = 0;
                for (Vertex v : chosen)
                    weight += r.triangles(v);
                if (best.empty() || weight > best_weight) {
                    best = chosen;
                    best_weight = weight;
                }
            }
            IndependentSet set;
            if (best.empty()) {
                trace.fallbacks.push_back({"case II", "every sample came back empty; used a Turán set"});
                const auto local = turan_independent_set(sub.graph);
                set.members = VertexSet(n, to_host_ids(local.members.members(), sub.to_host));
                set.certified_floor = local.certified_floor;
            } else {
                set.members = VertexSet(n, std::move(best));
            }
            trace.peels.push_back(peel_into(r, out, "case II", std::nullopt, set));
            continue;
        }
        trace.branches.push_back("case III");
        const auto c = greedy_degeneracy_coloring(sub.graph);
        out.place(c, sub.to_host);
        trace.residuals.push_back({"case III", alive.size(), c.colors_used});
        break;
    }
    return {out.finish(), std::move(trace)};
}

}  // namespace

ColoringRun color_by_vertex_count(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return vertex_count_impl(h, seed, options); });
}

ColoringRun color_by_triangle_buckets(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return triangle_buckets_impl(h, seed, options); });
}

ColoringRun color_by_edge_count(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return edge_count_impl(h, seed, options); });
}

ColoringRun color_by_edges_and_triangles(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return edges_and_triangles_impl(h, seed, options); });
}

ColoringRun color_explicit_constant(const Graph& g, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return explicit_constant_impl(h, options); });
}

ColoringRun color_hybrid_n(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return hybrid_impl(AlgorithmId::hybrid_n, h, seed, options); });
}

ColoringRun color_hybrid_m(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return hybrid_impl(AlgorithmId::hybrid_m, h, seed, options); });
}

ColoringRun color_conjectural(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    return timed(g, [&](const Graph& h) { return conjectural_impl(h, seed, options); });
}

ColoringRun run_algorithm(AlgorithmId id, const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    switch (id) {
    case AlgorithmId::prop0:
        return color_by_vertex_count(g, seed, options);
    case AlgorithmId::ttprop2:
        return color_by_triangle_buckets(g, seed, options);
    case AlgorithmId::prop0a:
        return color_by_edge_count(g, seed, options);
    case AlgorithmId::ttprop3:
        return color_by_edges_and_triangles(g, seed, options);
    case AlgorithmId::twprop1:
        return color_explicit_constant(g, options);
    case AlgorithmId::hybrid_n:
        return color_hybrid_n(g, seed, options);
    case AlgorithmId::hybrid_m:
        return color_hybrid_m(g, seed, options);
    case AlgorithmId::conjectural:
        return color_conjectural(g, seed, options);
    }
    throw PreconditionError("unknown algorithm id");
}

ColoringRun color_best_of(const Graph& g, std::uint64_t seed, std::span<const AlgorithmId> algorithms,
                          const ColoringOptions& options, bool parallel)
{
    std::vector<AlgorithmId> ids(algorithms.begin(), algorithms.end());
    if (ids.empty())
        ids.assign(kAllAlgorithms.begin(), kAllAlgorithms.end());

    const auto start = Clock::now();
    std::vector<ColoringRun> runs;
    runs.reserve(ids.size());
    if (parallel) {
        std::vector<std::future<ColoringRun>> pending;
        for (auto id : ids)
            pending.push_back(std::async(std::launch::async, [&, id] { return run_algorithm(id, g, seed, options); }));
        for (auto& p : pending)
            runs.push_back(p.get());
    } else {
        for (auto id : ids)
            runs.push_back(run_algorithm(id, g, seed, options));
    }

    std::size_t winner = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (runs[i].coloring.colors_used < runs[winner].coloring.colors_used)
            winner = i;
    ColoringRun best = std::move(runs[winner]);
    best.trace.candidates.clear();
    for (std::size_t i = 0; i < ids.size(); ++i)
        best.trace.candidates.emplace_back(std::string(to_string(ids[i])),
                                           i == winner ? best.coloring.colors_used : runs[i].coloring.colors_used);
    best.trace.branches.insert(best.trace.branches.begin(), "best-of winner: " + best.trace.algorithm);
    best.trace.algorithm = "best";
    best.trace.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return best;
}

IndependentSet independence_lower_bound(const Graph& g, std::uint64_t seed, const ColoringOptions& options)
{
    const std::size_t n = g.num_vertices();
    if (n == 0)
        throw PreconditionError("independence_lower_bound requires n >= 1");
    const auto stats = count_triangles(g);
    // a_v <= 10 t / n, compared as a_v * n <= 10 t.
    const auto s = select(n, [&](Vertex v) {
        return static_cast<unsigned __int128>(stats.per_vertex[v]) * n <= static_cast<unsigned __int128>(stats.total) * 10;
    });
    IndependentSet out;
    out.members = VertexSet(n, {});
    if (s.empty())
        return out;
    const auto sub = induced_subgraph(g, s);
    const auto run = color_best_of(sub.graph, seed, {}, options);
    const auto classes = color_classes(run.coloring);
    std::size_t largest = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
        if (classes[c].size() > classes[largest].size())
            largest = c;
    out.members = VertexSet(n, to_host_ids(classes[largest], sub.to_host));
    out.certified_floor = (s.size() + run.coloring.colors_used - 1) / run.coloring.colors_used;
    return out;
}

}  // namespace trichrome
