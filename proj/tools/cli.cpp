#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trichrome/base_coloring.hpp"
#include "trichrome/bounds.hpp"
#include "trichrome/coloring.hpp"
#include "trichrome/composite.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/generators.hpp"
#include "trichrome/graph_io.hpp"
#include "trichrome/harness.hpp"
#include "trichrome/independent_set.hpp"
#include "trichrome/oracles.hpp"
#include "trichrome/report.hpp"
#include "trichrome/triangles.hpp"

namespace trichrome::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
    std::uint64_t seed = 1;
    std::string format = "json";
    bool quiet = false;
};

bool csv(const Globals& g) { return g.format == "csv"; }

Graph read_graph(const std::string& path, const std::string& format)
{
    const GraphFormat f = format == "auto" ? guess_graph_format(path) : parse_graph_format(format);
    return load_graph_file(path, f);
}

void add_graph_format(CLI::App* cmd, std::string& target)
{
    cmd->add_option("--graph-format", target, "Graph file format")
        ->check(CLI::IsMember({"auto", "edge_list", "dimacs"}))
        ->capture_default_str();
}

Json vertex_list(std::span<const Vertex> vs)
{
    Json a = Json::array();
    for (Vertex v : vs)
        a.push_back(v);
    return a;
}

// analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    std::string graph;
    std::string graph_format = "auto";
};

int cmd_analyze(const AnalyzeArgs& a, const Globals& gl, std::ostream& out)
{
    const Graph g = read_graph(a.graph, a.graph_format);
    if (!csv(gl)) {
        out << analysis_json(g, 2) << '\n';
        return kExitOk;
    }
    const auto stats = count_triangles(g);
    out << "n,m,t,y,max_degree,degeneracy\n"
        << g.num_vertices() << ',' << g.num_edges() << ',' << stats.total << ',' << stats.local_bound << ','
        << g.max_degree() << ',' << degeneracy_order(g).degeneracy << '\n';
    return kExitOk;
}

// bounds ----------------------------------------------------------------

struct BoundsArgs {
    std::optional<std::uint64_t> n, m, t, y;
    std::string graph;
    std::string graph_format = "auto";
    std::vector<double> constants;
};

int cmd_bounds(const BoundsArgs& a, const Globals& gl, std::ostream& out, std::ostream& err)
{
    std::uint64_t n = 0, m = 0, t = 0, y = 0;
    if (!a.graph.empty()) {
        const Graph g = read_graph(a.graph, a.graph_format);
        const auto stats = count_triangles(g);
        n = g.num_vertices();
        m = g.num_edges();
        t = stats.total;
        y = stats.local_bound;
    }
    else {
        if (!a.n || !a.m || !a.t || !a.y)
            throw PreconditionError("bounds: give --graph or all of --n --m --t --y");
        n = *a.n;
        m = *a.m;
        t = *a.t;
        y = *a.y;
    }
    BoundConstants constants;
    if (!a.constants.empty()) {
        if (a.constants.size() != constants.factor.size())
            throw PreconditionError("bounds: --constants takes exactly 6 values");
        for (std::size_t i = 0; i < constants.factor.size(); ++i)
            constants.factor[i] = a.constants[i];
    }

    const auto verdict = check_feasibility(n, m, t, y);
    if (!verdict.pass()) {
        out << to_json(verdict, 2) << '\n';
        err << "error: infeasible tuple, first failing check: " << verdict.first_failure()->name << '\n';
        return kExitUsage;
    }
    const auto report = evaluate_bounds(n, m, t, y, constants);
    if (!csv(gl)) {
        out << to_json(report, 2) << '\n';
        return kExitOk;
    }
    out << "n,m,t,y,a1,a2,a3,a4,a5,a6,argmin,explicit_bound\n"
        << n << ',' << m << ',' << t << ',' << y;
    for (double v : report.a)
        out << ',' << format_real(v);
    out << ',' << report.argmin << ',' << format_real(explicit_constant_bound(n, t)) << '\n';
    return kExitOk;
}

// color -----------------------------------------------------------------

struct ColorArgs {
    std::string graph;
    std::string graph_format = "auto";
    std::string alg = "best";
    std::string out;
    std::string trace;
    std::string base_strategy = "greedy_degeneracy";
    double palette_constant = 4.0;
    std::size_t restarts = kDefaultListRestarts;
    bool parallel = false;
};

int cmd_color(const ColorArgs& a, const Globals& gl, std::ostream& out, std::ostream& err)
{
    const Graph g = read_graph(a.graph, a.graph_format);
    ColoringOptions options;
    options.base.strategy = parse_base_strategy(a.base_strategy);
    options.base.palette_constant = a.palette_constant;
    options.list_restarts = a.restarts;

    const AlgorithmChoice choice = parse_algorithm_choice(a.alg);
    const ColoringRun run = choice.id ? run_algorithm(*choice.id, g, gl.seed, options)
                                      : color_best_of(g, gl.seed, {}, options, a.parallel);
    const auto verdict = verify_proper(g, run.coloring);

    if (!a.out.empty())
        save_coloring_file(a.out, run.coloring);
    if (!a.trace.empty()) {
        std::ofstream trace(a.trace);
        if (!trace)
            throw PreconditionError("cannot open " + a.trace + " for writing");
        trace << to_json(run.trace, 2) << '\n';
    }

    if (!gl.quiet) {
        if (csv(gl)) {
            out << "alg,n,m,seed,colors,proper\n"
                << choice.name() << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << gl.seed << ','
                << run.coloring.colors_used << ',' << (verdict.proper ? 1 : 0) << '\n';
        }
        else {
            Json j{{"algorithm", choice.name()},
                   {"n", g.num_vertices()},
                   {"m", g.num_edges()},
                   {"seed", gl.seed},
                   {"colors_used", run.coloring.colors_used},
                   {"proper", verdict.proper}};
            if (!choice.id)
                j["winner"] = run.trace.branches.empty() ? std::string() : run.trace.branches.front();
            out << j.dump(2) << '\n';
        }
        if (a.out.empty() && !csv(gl))
            save_coloring(out, run.coloring);
    }
    if (!verdict.proper) {
        err << "error: produced coloring is improper at edge (" << verdict.violation->first << ", "
            << verdict.violation->second << ")\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// generate --------------------------------------------------------------

struct GenerateArgs {
    std::string family;
    std::uint64_t n = 0, k = 0, i = 1, y = 0, t = 0, m = 0;
    double p = 0.0;
    std::string out;
    std::string certificate;
};

int cmd_generate(const GenerateArgs& a, const Globals& gl, std::ostream& out)
{
    GenSpec spec;
    spec.family = parse_family(a.family);
    spec.n = a.n;
    spec.p = a.p;
    spec.k = a.k;
    spec.i = a.i;
    spec.y = a.y;
    spec.t = a.t;
    spec.m = a.m;
    spec.seed = gl.seed;
    const CertifiedInstance inst = generate(spec);

    if (!a.certificate.empty()) {
        std::ofstream cert(a.certificate);
        if (!cert)
            throw PreconditionError("cannot open " + a.certificate + " for writing");
        cert << to_json(inst, 2) << '\n';
    }
    if (a.out.empty()) {
        save_graph(out, inst.graph, GraphFormat::edge_list);
        return kExitOk;
    }
    save_graph_file(a.out, inst.graph, guess_graph_format(a.out));
    if (!gl.quiet)
        out << to_json(inst, 2) << '\n';
    return kExitOk;
}

// verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string graph;
    std::string graph_format = "auto";
    std::string coloring;
};

int cmd_verify(const VerifyArgs& a, const Globals& gl, std::ostream& out)
{
    const Graph g = read_graph(a.graph, a.graph_format);
    const Coloring c = load_coloring_file(a.coloring, g.num_vertices());
    const auto verdict = verify_proper(g, c);
    if (!gl.quiet) {
        if (csv(gl)) {
            out << "proper,colors,violation_u,violation_v\n" << (verdict.proper ? 1 : 0) << ',' << c.colors_used << ',';
            if (verdict.violation)
                out << verdict.violation->first << ',' << verdict.violation->second;
            else
                out << ',';
            out << '\n';
        }
        else {
            Json j{{"proper", verdict.proper}, {"colors_used", c.colors_used}};
            j["violation"] = verdict.violation ? Json::array({verdict.violation->first, verdict.violation->second})
                                               : Json(nullptr);
            out << j.dump(2) << '\n';
        }
    }
    return verdict.proper ? kExitOk : kExitVerificationFailed;
}

// oracle ----------------------------------------------------------------

struct OracleArgs {
    std::string graph;
    std::string graph_format = "auto";
    std::string what;
};

int cmd_oracle(const OracleArgs& a, const Globals& gl, std::ostream& out)
{
    const Graph g = read_graph(a.graph, a.graph_format);
    Json j{{"what", a.what}, {"n", g.num_vertices()}};
    std::string value;
    if (a.what == "chi") {
        const auto chi = exact_chromatic(g);
        j["value"] = chi;
        value = std::to_string(chi);
    }
    else if (a.what == "alpha") {
        const auto set = exact_max_independent_set(g);
        j["value"] = set.members.size();
        j["witness"] = vertex_list(set.members.members());
        value = std::to_string(set.members.size());
    }
    else if (a.what == "chif") {
        const auto r = fractional_chromatic(g);
        value = r.value.str();
        j["value"] = value;
        j["numeric"] = r.value.value();
        Json support = Json::array();
        for (std::size_t s = 0; s < r.support.size(); ++s)
            support.push_back({{"set", vertex_list(r.support[s])}, {"weight", r.support_weights[s].str()}});
        j["support"] = std::move(support);
    }
    else {
        const auto r = hall_ratio(g);
        value = r.value.str();
        j["value"] = value;
        j["numeric"] = r.value.value();
        j["witness"] = vertex_list(r.witness);
    }
    if (csv(gl))
        out << "what,n,value\n" << a.what << ',' << g.num_vertices() << ',' << value << '\n';
    else
        out << j.dump(2) << '\n';
    return kExitOk;
}

// bench -----------------------------------------------------------------

struct BenchArgs {
    std::string plan;
    std::string out;
    std::optional<std::size_t> parallelism;
};

int cmd_bench(const BenchArgs& a, const Globals& gl, std::ostream& out, std::ostream& err)
{
    ExperimentPlan plan = load_plan_file(a.plan);
    if (!a.out.empty())
        plan.out_dir = a.out;
    if (a.parallelism)
        plan.parallelism = *a.parallelism;
    const ResultSet results = run_plan(plan);
    persist_results(plan, results);

    bool improper = false;
    for (const auto& row : results.rows) {
        if (row.error.empty())
            continue;
        improper = improper || row.error.starts_with("improper");
        if (!gl.quiet)
            err << "cell " << row.family << '/' << row.size << '/' << row.seed << '/' << row.algorithm
                << " failed: " << row.error << '\n';
    }
    if (!gl.quiet) {
        if (csv(gl)) {
            write_csv(out, results);
        }
        else {
            Json slopes = Json::array();
            for (const auto& s : results.slopes)
                slopes.push_back({{"family", s.family},
                                  {"algorithm", s.algorithm},
                                  {"points", s.points},
                                  {"slope", std::stod(format_real(s.slope))}});
            Json j{{"rows", results.rows.size()},
                   {"failures", results.failures},
                   {"out", plan.out_dir},
                   {"slopes", std::move(slopes)}};
            out << j.dump(2) << '\n';
        }
    }
    return improper ? kExitVerificationFailed : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Triangle-aware graph coloring workbench", "trichrome"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "trichrome 0.3.0");

    Globals gl;
    app.add_option("--seed", gl.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--format", gl.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--quiet,-q", gl.quiet, "Suppress informational output");

    AnalyzeArgs analyze;
    auto* c_analyze = app.add_subcommand("analyze", "Triangle statistics and bounds for a graph file");
    c_analyze->add_option("graph,--graph", analyze.graph, "Graph file")->required();
    add_graph_format(c_analyze, analyze.graph_format);

    BoundsArgs bounds;
    auto* c_bounds = app.add_subcommand("bounds", "Evaluate a1..a6 for (n, m, t, y) or a graph file");
    c_bounds->add_option("--n", bounds.n);
    c_bounds->add_option("--m", bounds.m);
    c_bounds->add_option("--t", bounds.t);
    c_bounds->add_option("--y", bounds.y);
    c_bounds->add_option("--graph", bounds.graph, "Graph file");
    c_bounds->add_option("--constants", bounds.constants, "Six multiplicative constants for a1..a6");
    add_graph_format(c_bounds, bounds.graph_format);

    ColorArgs color;
    auto* c_color = app.add_subcommand("color", "Color a graph and verify the result");
    c_color->add_option("--graph", color.graph, "Graph file")->required();
    c_color->add_option("--alg", color.alg, "Algorithm id or 'best'")->capture_default_str();
    c_color->add_option("--out", color.out, "Write the coloring here ('v c' lines)");
    c_color->add_option("--trace", color.trace, "Write the run trace JSON here");
    c_color->add_option("--base-strategy", color.base_strategy, "Base colorer")
        ->check(CLI::IsMember({"greedy_degeneracy", "iterated_sparsify"}))
        ->capture_default_str();
    c_color->add_option("--palette-constant", color.palette_constant, "Palette constant c")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_color->add_option("--restarts", color.restarts, "List-coloring restarts")->capture_default_str();
    c_color->add_flag("--parallel", color.parallel, "Run best-of candidates on separate threads");
    add_graph_format(c_color, color.graph_format);

    GenerateArgs gen;
    auto* c_gen = app.add_subcommand("generate", "Generate a certified instance");
    c_gen->add_option("--family", gen.family, "gnp|triangle_free_process|clique|blow_up|lb_nyt|lb_myt")
        ->required();
    c_gen->add_option("--n", gen.n);
    c_gen->add_option("--p", gen.p);
    c_gen->add_option("--i", gen.i);
    c_gen->add_option("--k", gen.k);
    c_gen->add_option("--y", gen.y);
    c_gen->add_option("--t", gen.t);
    c_gen->add_option("--m", gen.m);
    c_gen->add_option("--out", gen.out, "Write the graph here (edge list unless *.col)");
    c_gen->add_option("--certificate", gen.certificate, "Write the certificate JSON here");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "Check that a coloring is proper");
    c_verify->add_option("--graph", verify.graph, "Graph file")->required();
    c_verify->add_option("--coloring", verify.coloring, "Coloring file")->required();
    add_graph_format(c_verify, verify.graph_format);

    OracleArgs oracle;
    auto* c_oracle = app.add_subcommand("oracle", "Exact chi, alpha, fractional chi or Hall ratio");
    c_oracle->add_option("--graph", oracle.graph, "Graph file")->required();
    c_oracle->add_option("--what", oracle.what, "Quantity")
        ->required()
        ->check(CLI::IsMember({"chi", "alpha", "chif", "rho"}));
    add_graph_format(c_oracle, oracle.graph_format);

    BenchArgs bench;
    auto* c_bench = app.add_subcommand("bench", "Run an experiment plan");
    c_bench->add_option("--plan,plan", bench.plan, "Plan JSON file")->required();
    c_bench->add_option("--out", bench.out, "Override the plan's output directory");
    c_bench->add_option("--parallelism", bench.parallelism, "Override the plan's thread count");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_analyze->parsed())
            return cmd_analyze(analyze, gl, out);
        if (c_bounds->parsed())
            return cmd_bounds(bounds, gl, out, err);
        if (c_color->parsed())
            return cmd_color(color, gl, out, err);
        if (c_gen->parsed())
            return cmd_generate(gen, gl, out);
        if (c_verify->parsed())
            return cmd_verify(verify, gl, out);
        if (c_oracle->parsed())
            return cmd_oracle(oracle, gl, out);
        if (c_bench->parsed())
            return cmd_bench(bench, gl, out, err);
    }
    catch (const FeasibilityError& e) {
        out << to_json(e.verdict(), 2) << '\n';
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace trichrome::cli
