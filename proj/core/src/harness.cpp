#include "trichrome/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json_util.hpp"
#include "trichrome/composite.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/oracles.hpp"
#include "trichrome/report.hpp"
#include "trichrome/triangles.hpp"

namespace trichrome {

using detail::Json;
using detail::round12;

std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string AlgorithmChoice::name() const { return id ? std::string(to_string(*id)) : std::string("best"); }

AlgorithmChoice parse_algorithm_choice(const std::string& name)
{
    if (name == "best")
        return {};
    return {parse_algorithm(name)};
}

namespace {

template <typename T>
std::vector<T> read_list(const Json& j, const char* key, bool required)
{
    if (!j.contains(key)) {
        if (required)
            throw PreconditionError(std::string("plan is missing '") + key + "'");
        return {};
    }
    if (!j[key].is_array())
        throw PreconditionError(std::string("plan field '") + key + "' must be an array");
    return j[key].get<std::vector<T>>();
}

FamilySweep parse_sweep(const Json& j)
{
    FamilySweep s;
    if (j.is_string()) {
        s.family = parse_family(j.get<std::string>());
    } else if (j.is_object()) {
        s.family = parse_family(j.at("family").get<std::string>());
        s.p = j.value("p", s.p);
        s.i = j.value("i", s.i);
        s.y = j.value("y", s.y);
        s.t = j.value("t", s.t);
        s.label = j.value("label", std::string());
    } else {
        throw PreconditionError("plan family entries must be names or objects");
    }
    if (s.label.empty())
        s.label = std::string(to_string(s.family));
    return s;
}

GenSpec spec_for(const FamilySweep& sweep, std::uint64_t size, std::uint64_t seed)
{
    GenSpec spec;
    spec.family = sweep.family;
    spec.seed = seed;
    spec.p = sweep.p;
    spec.i = sweep.i;
    spec.y = sweep.y;
    spec.t = sweep.t;
    switch (sweep.family) {
    case Family::blow_up:
        spec.k = size;
        break;
    case Family::lb_myt:
        spec.m = size;
        break;
    default:
        spec.n = size;
        break;
    }
    return spec;
}

struct Cell {
    std::size_t family = 0, size = 0, seed = 0, algorithm = 0;
};

}  // namespace

ExperimentPlan parse_plan(const std::string& json_text)
{
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("plan is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw PreconditionError("plan must be a JSON object");
    ExperimentPlan plan;
    try {
        for (const auto& f : j.at("families"))
            plan.families.push_back(parse_sweep(f));
        plan.sizes = read_list<std::uint64_t>(j, "sizes", true);
        plan.seeds = read_list<std::uint64_t>(j, "seeds", true);
        for (const auto& a : read_list<std::string>(j, "algorithms", true))
            plan.algorithms.push_back(parse_algorithm_choice(a));
        plan.out_dir = j.value("out", std::string());
        plan.parallelism = j.value("parallelism", std::size_t{1});
        plan.record_timing = j.value("timing", true);
        plan.include_traces = j.value("traces", false);
    } catch (const Json::exception& e) {
        throw PreconditionError(std::string("plan schema error: ") + e.what());
    }
    if (plan.families.empty() || plan.sizes.empty() || plan.seeds.empty() || plan.algorithms.empty())
        throw PreconditionError("plan needs at least one family, size, seed and algorithm");
    plan.parallelism = std::max<std::size_t>(plan.parallelism, 1);
    return plan;
}

ExperimentPlan load_plan_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open plan file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_plan(ss.str());
}

ResultSet run_plan(const ExperimentPlan& plan)
{
    // Instances first: one per (family, size, seed).
    struct Instance {
        std::optional<CertifiedInstance> value;
        std::string error;
        BoundsReport bounds;
    };
    const std::size_t nf = plan.families.size(), ns = plan.sizes.size(), nseeds = plan.seeds.size();
    std::vector<Instance> instances(nf * ns * nseeds);
    auto instance_index = [&](std::size_t f, std::size_t s, std::size_t r) { return (f * ns + s) * nseeds + r; };

    auto run_parallel = [&](std::size_t count, auto&& body) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < count; i = next++)
                body(i);
        };
        const std::size_t width = std::min(plan.parallelism, std::max<std::size_t>(count, 1));
        std::vector<std::thread> pool;
        for (std::size_t w = 1; w < width; ++w)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();
    };

    run_parallel(instances.size(), [&](std::size_t idx) {
        const std::size_t r = idx % nseeds, s = (idx / nseeds) % ns, f = idx / (nseeds * ns);
        auto& inst = instances[idx];
        try {
            inst.value = generate(spec_for(plan.families[f], plan.sizes[s], plan.seeds[r]));
            const auto& c = inst.value->certificate;
            inst.bounds = evaluate_bounds(c.n, c.m, c.t, c.y);
        } catch (const std::exception& e) {
            inst.value.reset();
            inst.error = e.what();
        }
    });

    std::vector<Cell> cells;
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t r = 0; r < nseeds; ++r)
                for (std::size_t a = 0; a < plan.algorithms.size(); ++a)
                    cells.push_back({f, s, r, a});

    std::vector<ResultRow> rows(cells.size());
    run_parallel(cells.size(), [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        const auto& inst = instances[instance_index(cell.family, cell.size, cell.seed)];
        ResultRow& row = rows[idx];
        row.family = plan.families[cell.family].label;
        row.size = plan.sizes[cell.size];
        row.seed = plan.seeds[cell.seed];
        const auto& choice = plan.algorithms[cell.algorithm];
        row.algorithm = choice.name();
        if (!inst.value) {
            row.error = "generation failed: " + inst.error;
            return;
        }
        const auto& c = inst.value->certificate;
        row.n = c.n;
        row.m = c.m;
        row.t = c.t;
        row.y = c.y;
        row.bounds = inst.bounds.a;
        row.explicit_bound = explicit_constant_bound(c.n, c.t);
        try {
            const Graph& g = inst.value->graph;
            ColoringRun run = choice.id ? run_algorithm(*choice.id, g, row.seed) : color_best_of(g, row.seed);
            const auto verdict = verify_proper(g, run.coloring);
            if (!verdict.proper) {
                row.error = "improper coloring at edge (" + std::to_string(verdict.violation->first) + ", " +
                            std::to_string(verdict.violation->second) + ")";
                return;
            }
            row.colors = static_cast<std::int64_t>(run.coloring.colors_used);
            row.ms = plan.record_timing ? run.trace.wall_ms : 0.0;
            if (plan.include_traces)
                row.trace_json = to_json(run.trace);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    ResultSet out;
    out.rows = std::move(rows);  // already in plan order: family, size, seed, algorithm
    for (const auto& r : out.rows)
        if (r.colors < 0)
            ++out.failures;

    for (const auto& sweep : plan.families)
        for (const auto& choice : plan.algorithms) {
            std::vector<double> xs, ys;
            for (const auto& r : out.rows)
                if (r.family == sweep.label && r.algorithm == choice.name() && r.colors > 0 && r.n > 0) {
                    xs.push_back(static_cast<double>(r.n));
                    ys.push_back(static_cast<double>(r.colors));
                }
            if (xs.size() < 2 || std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); }))
                continue;
            if (std::any_of(out.slopes.begin(), out.slopes.end(), [&](const SlopeFit& s) {
                    return s.family == sweep.label && s.algorithm == choice.name();
                }))
                continue;
            SlopeFit fit = fit_loglog(xs, ys);
            fit.family = sweep.label;
            fit.algorithm = choice.name();
            out.slopes.push_back(std::move(fit));
        }
    return out;
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw PreconditionError("fit_loglog needs at least two (x, y) pairs");
    const std::size_t k = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (!(x[i] > 0) || !(y[i] > 0))
            throw DomainError("fit_loglog requires positive values");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = static_cast<double>(k) * sxx - sx * sx;
    if (denom == 0.0)
        throw PreconditionError("fit_loglog needs distinct x values");
    SlopeFit fit;
    fit.points = k;
    fit.slope = (static_cast<double>(k) * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / static_cast<double>(k);
    return fit;
}

void write_csv(std::ostream& out, const ResultSet& results)
{
    out << kCsvHeader << '\n';
    for (const auto& r : results.rows) {
        out << r.family << ',' << r.n << ',' << r.m << ',' << r.t << ',' << r.y << ',' << r.algorithm << ','
            << r.seed << ',' << r.colors;
        for (double b : r.bounds)
            out << ',' << format_real(b);
        out << ',' << format_real(r.explicit_bound) << ',' << format_real(r.ms) << '\n';
    }
}

void write_results_json(std::ostream& out, const ExperimentPlan& plan, const ResultSet& results)
{
    Json j;
    Json families = Json::array();
    for (const auto& f : plan.families)
        families.push_back({{"family", std::string(to_string(f.family))},
                            {"label", f.label},
                            {"p", round12(f.p)},
                            {"i", f.i},
                            {"y", f.y},
                            {"t", f.t}});
    Json algorithms = Json::array();
    for (const auto& a : plan.algorithms)
        algorithms.push_back(a.name());
    j["plan"] = {{"families", std::move(families)}, {"sizes", plan.sizes}, {"seeds", plan.seeds},
                 {"algorithms", std::move(algorithms)}, {"out", plan.out_dir}};
    j["rows"] = Json::array();
    for (const auto& r : results.rows) {
        Json row{{"family", r.family}, {"size", r.size}, {"n", r.n},           {"m", r.m},
                 {"t", r.t},           {"y", r.y},       {"alg", r.algorithm}, {"seed", r.seed},
                 {"colors", r.colors}};
        Json bounds = Json::array();
        for (double b : r.bounds)
            bounds.push_back(round12(b));
        row["bounds"] = std::move(bounds);
        row["explicit_bound"] = round12(r.explicit_bound);
        row["ms"] = round12(r.ms);
        if (!r.error.empty())
            row["error"] = r.error;
        if (!r.trace_json.empty())
            row["trace"] = Json::parse(r.trace_json);
        j["rows"].push_back(std::move(row));
    }
    j["slopes"] = Json::array();
    for (const auto& s : results.slopes)
        j["slopes"].push_back({{"family", s.family},
                               {"alg", s.algorithm},
                               {"points", s.points},
                               {"slope", round12(s.slope)},
                               {"intercept", round12(s.intercept)}});
    j["failures"] = results.failures;
    out << j.dump(2) << '\n';
}

void persist_results(const ExperimentPlan& plan, const ResultSet& results)
{
    const std::filesystem::path dir = plan.out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(plan.out_dir);
    std::filesystem::create_directories(dir);
    std::ofstream csv(dir / "results.csv", std::ios::binary);
    write_csv(csv, results);
    std::ofstream json(dir / "results.json", std::ios::binary);
    write_results_json(json, plan, results);
    if (!csv || !json)
        throw std::runtime_error("failed writing results to " + dir.string());
}

}  // namespace trichrome
