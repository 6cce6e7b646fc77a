#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support.hpp"
#include "trichrome/graph_io.hpp"

namespace fs = std::filesystem;
using trichrome::cli::run_cli;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "trichrome");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "trichrome_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream cl(line);
        std::string cell;
        while (std::getline(cl, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("color then verify")
{
    const auto dir = scratch("color");
    const auto graph = dir / "g.txt";
    trichrome::save_graph_file(graph.string(), support::random_graph(40, 0.3, 5), trichrome::GraphFormat::edge_list);
    const auto coloring = dir / "c.txt";
    const auto trace = dir / "trace.json";

    auto r = run({"color", "--graph", graph.string(), "--alg", "prop0", "--out", coloring.string(), "--trace",
                  trace.string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["proper"] == true);
    CHECK(j["algorithm"] == "prop0");
    CHECK(nlohmann::json::parse(slurp(trace))["algorithm"] == "prop0");

    r = run({"verify", "--graph", graph.string(), "--coloring", coloring.string()});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["proper"] == true);

    // Force the first edge's endpoints onto one color.
    const auto g = trichrome::load_graph_file(graph.string(), trichrome::GraphFormat::edge_list);
    auto c = trichrome::load_coloring_file(coloring.string(), 40);
    const auto edge = g.edges().front();
    c.assignment[edge.second] = c.assignment[edge.first];
    trichrome::save_coloring_file(coloring.string(), c);
    r = run({"verify", "--graph", graph.string(), "--coloring", coloring.string()});
    CHECK(r.code == 1);
    CHECK_FALSE(nlohmann::json::parse(r.out)["violation"].is_null());

    r = run({"--format", "csv", "color", "--graph", graph.string(), "--alg", "best", "--parallel"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("alg,n,m,seed,colors,proper\nbest,40,"));
}

TEST_CASE("bounds")
{
    auto r = run({"bounds", "--n", "4", "--m", "6", "--t", "4", "--y", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][10] == "4");

    r = run({"bounds", "--n", "10", "--m", "5", "--t", "51", "--y", "5"});
    CHECK(r.code == 2);
    const auto verdict = nlohmann::json::parse(r.out);
    CHECK(verdict.contains("checks"));
    CHECK(r.err.find("infeasible") != std::string::npos);

    CHECK(run({"bounds", "--n", "4"}).code == 2);
    CHECK(run({"bounds", "--n", "4", "--m", "6", "--t", "4", "--y", "3", "--constants", "1", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("analyze")
{
    auto r = run({"analyze", support::fixture_path("myciel3.col"), "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,m,t,y,max_degree,degeneracy\n11,20,0,0,5,3\n");

    const auto dir = scratch("analyze");
    write(dir / "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    r = run({"analyze", "--graph", (dir / "k4.txt").string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["t"] == 4);
    CHECK(j["y"] == 3);

    write(dir / "empty.txt", "0 0\n");
    CHECK(run({"analyze", (dir / "empty.txt").string()}).code == 0);
    write(dir / "bad.txt", "3 2\n0 1\n1 x\n");
    r = run({"analyze", (dir / "bad.txt").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("oracle")
{
    auto r = run({"oracle", "--graph", support::fixture_path("myciel3.col"), "--what", "chi"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == 4);

    const auto dir = scratch("oracle");
    write(dir / "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    r = run({"oracle", "--graph", (dir / "c5.txt").string(), "--what", "chif", "--format", "csv"});
    CHECK(r.out == "what,n,value\nchif,5,5/2\n");
    r = run({"oracle", "--graph", (dir / "c5.txt").string(), "--what", "alpha"});
    CHECK(nlohmann::json::parse(r.out)["witness"].size() == 2);
}

TEST_CASE("generate")
{
    const auto dir = scratch("generate");
    auto r = run({"--seed", "3", "generate", "--family", "tfp", "--n", "60", "--out", (dir / "g.txt").string(),
                  "--certificate", (dir / "cert.json").string()});
    REQUIRE(r.code == 0);
    const auto cert = nlohmann::json::parse(slurp(dir / "cert.json"));
    const auto g = trichrome::load_graph_file((dir / "g.txt").string(), trichrome::GraphFormat::edge_list);
    CHECK(cert["measured"]["m"] == g.num_edges());
    CHECK(cert["measured"]["t"] == 0);

    r = run({"generate", "--family", "clique", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("5 10\n"));
    CHECK(csv_rows(r.out).size() == 11);

    CHECK(run({"generate", "--family", "lb_nyt", "--n", "10", "--y", "5", "--t", "51"}).code == 2);
}

TEST_CASE("bench")
{
    const auto dir = scratch("bench");
    write(dir / "plan.json", R"({
        "families": ["gnp", "tfp"],
        "sizes": [30, 60],
        "seeds": [1, 2],
        "algorithms": ["prop0", "twprop1", "best"],
        "out": ")" + (dir / "a").generic_string() + R"(",
        "parallelism": 3,
        "timing": false
    })");
    auto r = run({"--format", "csv", "bench", (dir / "plan.json").string()});
    REQUIRE(r.code == 0);
    const auto first = slurp(dir / "a" / "results.csv");
    CHECK(first == r.out);
    CHECK(first.starts_with("family,n,m,t,y,alg,seed,colors,"));
    CHECK(csv_rows(first).size() == 1 + 2 * 2 * 2 * 3);

    r = run({"bench", "--plan", (dir / "plan.json").string(), "--out", (dir / "b").string(), "--parallelism", "1"});
    REQUIRE(r.code == 0);
    CHECK(slurp(dir / "b" / "results.csv") == first);
    CHECK(nlohmann::json::parse(r.out)["rows"] == 24);

    // Cliques: the explicit-constant colorer uses exactly s colors.
    write(dir / "cliques.json", R"({
        "families": ["clique"], "sizes": [3, 7, 12], "seeds": [1],
        "algorithms": ["twprop1"], "out": ")" + (dir / "c").generic_string() + R"(", "timing": false})");
    r = run({"--format", "csv", "bench", (dir / "cliques.json").string()});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i][1] == rows[i][7]);

    // Blow-ups of one base: alpha is fixed, so colors needed grow with i.
    write(dir / "blowups.json", R"({
        "families": [{"family": "blow_up", "i": 1, "label": "i1"},
                     {"family": "blow_up", "i": 2, "label": "i2"},
                     {"family": "blow_up", "i": 4, "label": "i4"}],
        "sizes": [40], "seeds": [1], "algorithms": ["best"],
        "out": ")" + (dir / "d").generic_string() + R"(", "timing": false})");
    r = run({"--format", "csv", "bench", (dir / "blowups.json").string()});
    REQUIRE(r.code == 0);
    const auto b = csv_rows(r.out);
    REQUIRE(b.size() == 4);
    CHECK(b[1][0] == "i1");
    CHECK(std::stoi(b[1][7]) <= std::stoi(b[2][7]));
    CHECK(std::stoi(b[2][7]) <= std::stoi(b[3][7]));

    CHECK(run({"bench", (dir / "missing.json").string()}).code == 2);
}
