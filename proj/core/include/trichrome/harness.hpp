#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trichrome/bounds.hpp"
#include "trichrome/generators.hpp"

namespace trichrome {

/// One family axis of a sweep. `size` values from the plan fill the
/// family's primary size parameter (n for most families, k for blow_up,
/// m for lb_myt); the remaining fields come from here.
struct FamilySweep {
    Family family = Family::gnp;
    double p = 0.1;
    std::uint64_t i = 2;
    std::uint64_t y = 0;
    std::uint64_t t = 0;
    /// Label written in the CSV family column; defaults to the family name.
    std::string label;
};

/// "best" is accepted alongside the eight algorithm ids.
struct AlgorithmChoice {
    std::optional<AlgorithmId> id;  // nullopt = best-of
    std::string name() const;
};

AlgorithmChoice parse_algorithm_choice(const std::string& name);

struct ExperimentPlan {
    std::vector<FamilySweep> families;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> seeds;
    std::vector<AlgorithmChoice> algorithms;
    std::string out_dir;
    std::size_t parallelism = 1;
    /// When false the ms column is written as 0 so reruns are byte-identical.
    bool record_timing = true;
    /// Persist full per-cell traces in results.json.
    bool include_traces = false;
};

/// JSON plan: {families:[name | {family, p, i, y, t, label}], sizes:[...],
/// seeds:[...], algorithms:[...], out:dir, parallelism?, timing?, traces?}.
/// Throws PreconditionError on schema violations.
ExperimentPlan parse_plan(const std::string& json_text);
ExperimentPlan load_plan_file(const std::string& path);

struct ResultRow {
    std::string family;
    std::uint64_t size = 0;
    std::uint64_t n = 0, m = 0, t = 0, y = 0;
    std::string algorithm;
    std::uint64_t seed = 0;
    /// -1 when the cell failed.
    std::int64_t colors = -1;
    std::array<double, 6> bounds{};
    double explicit_bound = 0.0;
    double ms = 0.0;
    std::string error;
    /// Serialized trace JSON when the plan asks for traces.
    std::string trace_json;
};

struct SlopeFit {
    std::string family;
    std::string algorithm;
    std::size_t points = 0;
    double slope = 0.0;
    double intercept = 0.0;
};

struct ResultSet {
    std::vector<ResultRow> rows;
    std::vector<SlopeFit> slopes;
    std::size_t failures = 0;
};

inline constexpr const char* kCsvHeader =
    "family,n,m,t,y,alg,seed,colors,bound_a1,bound_a2,bound_a3,bound_a4,bound_a5,bound_a6,explicit_bound,ms";

/// Runs every (instance, algorithm, seed) cell once. Cells run on up to
/// plan.parallelism threads; rows are sorted afterwards so the output does
/// not depend on scheduling.
ResultSet run_plan(const ExperimentPlan& plan);

/// Least-squares slope of log(y) against log(x). Requires >= 2 points with distinct x.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

void write_csv(std::ostream& out, const ResultSet& results);
void write_results_json(std::ostream& out, const ExperimentPlan& plan, const ResultSet& results);

/// Writes results.csv and results.json into plan.out_dir (created if needed).
void persist_results(const ExperimentPlan& plan, const ResultSet& results);

/// %.12g formatting used for every floating value in reports.
std::string format_real(double v);

}  // namespace trichrome
