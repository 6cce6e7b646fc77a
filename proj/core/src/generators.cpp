#include "trichrome/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trichrome/bounds.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/independent_set.hpp"
#include "trichrome/rng.hpp"
#include "trichrome/triangles.hpp"
#include "wide.hpp"

namespace trichrome {

std::string_view to_string(Family f) noexcept
{
    switch (f) {
    case Family::gnp:
        return "gnp";
    case Family::triangle_free_process:
        return "triangle_free_process";
    case Family::clique:
        return "clique";
    case Family::blow_up:
        return "blow_up";
    case Family::lb_nyt:
        return "lb_nyt";
    case Family::lb_myt:
        return "lb_myt";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    for (auto f : {Family::gnp, Family::triangle_free_process, Family::clique, Family::blow_up, Family::lb_nyt,
                   Family::lb_myt})
        if (to_string(f) == name)
            return f;
    if (name == "tfp" || name == "triangle-free-process")
        return Family::triangle_free_process;
    if (name == "blow-up")
        return Family::blow_up;
    throw PreconditionError("unknown family '" + std::string(name) + "'");
}

Measured measure(const Graph& g, std::size_t alpha_limit)
{
    Measured out;
    const auto stats = count_triangles(g);
    out.n = g.num_vertices();
    out.m = g.num_edges();
    out.t = stats.total;
    out.y = stats.local_bound;
    out.max_degree = g.max_degree();
    if (g.num_vertices() <= std::min(alpha_limit, kExactIndependentSetLimit))
        out.alpha = exact_max_independent_set(g).members.size();
    return out;
}

namespace {

double dbl(std::uint64_t v) { return static_cast<double>(v); }

std::uint64_t ceil_at_least_one(double x) { return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(x))); }

CertifiedInstance certify(Graph g, GenSpec spec)
{
    CertifiedInstance out;
    out.certificate = measure(g);
    out.graph = std::move(g);
    out.spec = spec;
    return out;
}

Graph triangle_free_process_graph(std::uint64_t n, std::uint64_t seed)
{
    if (n > 65535)
        throw PreconditionError("triangle-free process supports n <= 65535");
    std::vector<std::uint32_t> pairs;
    pairs.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            pairs.push_back(u * static_cast<std::uint32_t>(n) + v);
    Rng rng(seed);
    rng.shuffle(std::span<std::uint32_t>(pairs));

    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> bits(n * words, 0);
    std::vector<std::vector<Vertex>> adj(n);
    auto has = [&](Vertex a, Vertex b) { return (bits[a * words + b / 64] >> (b % 64)) & 1U; };
    std::vector<Edge> edges;
    for (auto code : pairs) {
        const Vertex u = code / static_cast<std::uint32_t>(n);
        const Vertex v = code % static_cast<std::uint32_t>(n);
        const auto& small = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        const Vertex other = adj[u].size() <= adj[v].size() ? v : u;
        bool closes = false;
        if (small.size() > words) {
            const std::uint64_t* a = &bits[u * words];
            const std::uint64_t* b = &bits[v * words];
            for (std::size_t i = 0; i < words && !closes; ++i)
                closes = (a[i] & b[i]) != 0;
        } else {
            for (Vertex w : small)
                if (has(other, w)) {
                    closes = true;
                    break;
                }
        }
        if (closes)
            continue;
        bits[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
        bits[v * words + u / 64] |= std::uint64_t{1} << (u % 64);
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

FeasibilityVerdict lb_verdict(std::vector<FeasibilityCheck> checks)
{
    FeasibilityVerdict v;
    v.checks = std::move(checks);
    return v;
}

CertifiedInstance blow_up_of_process(std::uint64_t k, std::uint64_t i, std::uint64_t seed, GenSpec spec)
{
    const Graph base = triangle_free_process_graph(k, seed);
    auto inst = blow_up(base, i);
    inst.spec = spec;
    return inst;
}

}  // namespace

CertifiedInstance gen_gnp(std::uint64_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw PreconditionError("gnp requires 0 <= p <= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    GenSpec spec;
    spec.family = Family::gnp;
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    auto out = certify(Graph(n, edges), spec);
    out.target = {{"expected_m", p * dbl(n) * dbl(n > 0 ? n - 1 : 0) / 2.0}};
    return out;
}

CertifiedInstance gen_triangle_free_process(std::uint64_t n, std::uint64_t seed)
{
    if (n == 0)
        throw PreconditionError("triangle-free process requires n >= 1");
    GenSpec spec;
    spec.family = Family::triangle_free_process;
    spec.n = n;
    spec.seed = seed;
    auto out = certify(triangle_free_process_graph(n, seed), spec);
    if (out.certificate.t != 0)
        throw InvariantViolation("triangle-free process emitted a triangle");
    const double ln_n = std::log(std::max(2.0, dbl(n)));
    out.target = {{"sqrt_n_ln_n", std::sqrt(dbl(n) * ln_n)}};
    return out;
}

CertifiedInstance gen_clique(std::uint64_t n)
{
    GenSpec spec;
    spec.family = Family::clique;
    spec.n = n;
    auto out = certify(Graph::complete(n), spec);
    out.target = {{"chi", dbl(n)}};
    return out;
}

CertifiedInstance blow_up(const Graph& base, std::uint64_t i)
{
    if (i == 0)
        throw PreconditionError("blow_up requires i >= 1");
    if (count_triangles(base).total != 0)
        throw PreconditionError("blow_up requires a triangle-free base graph");
    const std::uint64_t k = base.num_vertices();
    const auto id = [i](std::uint64_t x, std::uint64_t a) { return static_cast<Vertex>(x * i + a); };
    std::vector<Edge> edges;
    edges.reserve(k * i * (i - 1) / 2 + base.num_edges() * i * i);
    for (std::uint64_t x = 0; x < k; ++x)
        for (std::uint64_t a = 0; a < i; ++a)
            for (std::uint64_t b = a + 1; b < i; ++b)
                edges.emplace_back(id(x, a), id(x, b));
    for (auto [x, z] : base.edges())
        for (std::uint64_t a = 0; a < i; ++a)
            for (std::uint64_t b = 0; b < i; ++b)
                edges.emplace_back(id(x, a), id(z, b));
    GenSpec spec;
    spec.family = Family::blow_up;
    spec.k = k;
    spec.i = i;
    auto out = certify(Graph(k * i, edges), spec);
    out.target = {{"n", dbl(k * i)}, {"m", dbl(k * (i * (i - 1) / 2) + base.num_edges() * i * i)}};
    out.notes.push_back("base: k = " + std::to_string(k) + ", m = " + std::to_string(base.num_edges()));
    return out;
}

CertifiedInstance lower_bound_instance_nyt(std::uint64_t n, std::uint64_t y, std::uint64_t t, std::uint64_t seed)
{
    using detail::u128;
    auto verdict = lb_verdict({detail::make_check("y <= n^2", y, u128{n} * n),
                               detail::make_check("t <= n*y", t, u128{n} * y)});
    if (!verdict.pass() || n == 0)
        throw FeasibilityError(std::move(verdict));

    GenSpec spec;
    spec.family = Family::lb_nyt;
    spec.n = n;
    spec.y = y;
    spec.t = t;
    spec.seed = seed;

    const double yc = dbl(std::max<std::uint64_t>(y, 1));
    const double f = tlog_or_one(dbl(t) * dbl(t) / (yc * yc * yc));
    const double vertex_term = std::sqrt(dbl(n) / tlog_or_one(dbl(n)));
    const double cube_t = std::cbrt(dbl(t));
    const double triangle_term = cube_t / std::pow(f, 2.0 / 3.0);

    CertifiedInstance out;
    std::vector<std::pair<std::string, double>> target{
        {"f", f}, {"vertex_term", vertex_term}, {"triangle_term", triangle_term}};
    std::string branch;
    if (f == 1.0 && vertex_term < cube_t) {
        // Integer cube root, robust to floating error.
        auto s = static_cast<std::uint64_t>(std::floor(cube_t));
        while ((s + 1) * (s + 1) * (s + 1) <= t)
            ++s;
        while (s > 0 && s * s * s > t)
            --s;
        out = gen_clique(s);
        branch = "clique on floor(t^(1/3)) = " + std::to_string(s) + " vertices";
        const std::uint64_t local = s >= 3 ? (s - 1) * (s - 2) / 2 : 0;
        out.notes.push_back("clique local bound C(s-1,2) = " + std::to_string(local) +
                            (local <= y ? " <= y" : " > y"));
    } else if (vertex_term >= triangle_term) {
        out = certify(triangle_free_process_graph(n, seed), spec);
        branch = "triangle-free process graph on n vertices";
    } else {
        const double i = yc / (std::cbrt(f) * cube_t);
        const double k = std::cbrt(f) * std::pow(dbl(t), 4.0 / 3.0) / (yc * yc);
        const auto ic = ceil_at_least_one(i);
        const auto kc = ceil_at_least_one(k);
        out = blow_up_of_process(kc, ic, seed, spec);
        target.emplace_back("i", i);
        target.emplace_back("k", k);
        branch = "blow-up with ceil(i) = " + std::to_string(ic) + ", ceil(k) = " + std::to_string(kc);
        out.notes.push_back("vertices " + std::to_string(out.certificate.n) + " vs n = " + std::to_string(n));
    }
    out.spec = spec;
    out.target = std::move(target);
    out.notes.insert(out.notes.begin(), "branch: " + branch);
    out.notes.push_back("measured t = " + std::to_string(out.certificate.t) + " (target " + std::to_string(t) +
                        "), y = " + std::to_string(out.certificate.y) + " (target " + std::to_string(y) + ")");
    return out;
}

CertifiedInstance lower_bound_instance_myt(std::uint64_t m, std::uint64_t y, std::uint64_t t, std::uint64_t seed)
{
    using detail::u128;
    auto verdict = lb_verdict({detail::make_check("y <= m", y, m),
                               detail::make_check("t^2 <= m^2*y", u128{t} * t, u128{m} * m * y)});
    if (!verdict.pass() || m == 0)
        throw FeasibilityError(std::move(verdict));

    GenSpec spec;
    spec.family = Family::lb_myt;
    spec.m = m;
    spec.y = y;
    spec.t = t;
    spec.seed = seed;

    const double yc = dbl(std::max<std::uint64_t>(y, 1));
    const double f = tlog_or_one(dbl(m) / yc);
    const double g = tlog_or_one(dbl(t) * dbl(t) / (yc * yc * yc));
    const double case_one = g * g * std::pow(dbl(m) * yc, 0.75) / std::pow(f, 2.25);

    CertifiedInstance out;
    std::vector<std::pair<std::string, double>> target{{"f", f}, {"g", g}, {"case_I_threshold", case_one}};
    std::string branch;
    double i = 0, k = 0;
    const u128 yy = std::max<std::uint64_t>(y, 1);
    const bool clique = yy * yy * yy >= u128{t} * t;
    if (dbl(t) >= case_one) {
        i = std::pow(yc, 0.75) / std::pow(dbl(m) * f, 0.25);
        k = dbl(m) / yc;
        branch = "case I";
    } else if (clique) {
        auto s = static_cast<std::uint64_t>(std::floor(std::sqrt(yc)));
        while ((s + 1) * (s + 1) <= y)
            ++s;
        while (s > 0 && s * s > std::max<std::uint64_t>(y, 1))
            --s;
        out = gen_clique(s);
        branch = "case II, clique on floor(sqrt(y)) = " + std::to_string(s) + " vertices";
    } else {
        i = yc / std::cbrt(g * dbl(t));
        k = std::cbrt(g) * std::pow(dbl(t), 4.0 / 3.0) / (yc * yc);
        branch = "case II";
    }
    if (k > 0) {
        const auto ic = ceil_at_least_one(i);
        const auto kc = ceil_at_least_one(k);
        out = blow_up_of_process(kc, ic, seed, spec);
        target.emplace_back("i", i);
        target.emplace_back("k", k);
        branch += " blow-up with ceil(i) = " + std::to_string(ic) + ", ceil(k) = " + std::to_string(kc);
    }
    out.spec = spec;
    out.target = std::move(target);
    out.notes.insert(out.notes.begin(), "branch: " + branch);
    if (out.certificate.m > m)
        throw ConstructionInfeasible(branch + ": measured m = " + std::to_string(out.certificate.m) +
                                     " exceeds target m = " + std::to_string(m));
    out.notes.push_back("measured m = " + std::to_string(out.certificate.m) + " (target " + std::to_string(m) +
                        "), t = " + std::to_string(out.certificate.t) + ", y = " + std::to_string(out.certificate.y));
    return out;
}

CertifiedInstance generate(const GenSpec& spec)
{
    CertifiedInstance out;
    switch (spec.family) {
    case Family::gnp:
        return gen_gnp(spec.n, spec.p, spec.seed);
    case Family::triangle_free_process:
        return gen_triangle_free_process(spec.n, spec.seed);
    case Family::clique:
        return gen_clique(spec.n);
    case Family::blow_up:
        out = blow_up_of_process(spec.k, spec.i, spec.seed, spec);
        return out;
    case Family::lb_nyt:
        return lower_bound_instance_nyt(spec.n, spec.y, spec.t, spec.seed);
    case Family::lb_myt:
        return lower_bound_instance_myt(spec.m, spec.y, spec.t, spec.seed);
    }
    throw PreconditionError("unknown family");
}

}  // namespace trichrome
