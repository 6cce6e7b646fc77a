#include "trichrome/report.hpp"

#include "json_util.hpp"

namespace trichrome {

namespace {

using detail::Json;
using detail::round12;

Json verdict_json(const FeasibilityVerdict& v)
{
    Json checks = Json::array();
    for (const auto& c : v.checks)
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    return {{"pass", v.pass()}, {"checks", std::move(checks)}};
}

Json bounds_json(const BoundsReport& r)
{
    Json a = Json::array();
    for (double v : r.a)
        a.push_back(round12(v));
    Json constants = Json::array();
    for (double v : r.constants.factor)
        constants.push_back(round12(v));
    return {
        {"inputs", {{"n", r.n}, {"m", r.m}, {"t", r.t}, {"y", r.y}, {"y_clamped", r.y_clamped}}},
        {"f_values",
         {{"f_n", round12(r.f_n)},
          {"f_m", round12(r.f_m)},
          {"g", round12(r.g)},
          {"log_n", round12(r.log_n)},
          {"log_m", round12(r.log_m)}}},
        {"a", std::move(a)},
        {"argmin", r.argmin},
        {"constants", std::move(constants)},
        {"feasibility", verdict_json(r.feasibility)},
    };
}

Json parameters_json(const ParameterRecord& p)
{
    Json reals = Json::object();
    for (const auto& [k, v] : p.reals)
        reals[k] = round12(v);
    Json integers = Json::object();
    for (const auto& [k, v] : p.integers)
        integers[k] = v;
    return {{"algorithm", p.algorithm}, {"branch", p.branch}, {"reals", std::move(reals)},
            {"integers", std::move(integers)}};
}

Json trace_json(const RunTrace& t)
{
    Json j;
    j["algorithm"] = t.algorithm;
    j["experimental"] = t.experimental;
    j["colors_used"] = t.colors_used;
    j["wall_ms"] = round12(t.wall_ms);
    j["parameters"] = Json::array();
    for (const auto& p : t.parameters)
        j["parameters"].push_back(parameters_json(p));
    j["branches"] = t.branches;
    j["peels"] = Json::array();
    for (const auto& p : t.peels) {
        Json e{{"stage", p.stage},
               {"set_size", p.set_size},
               {"certified_floor", p.certified_floor},
               {"triangles_removed", p.triangles_removed},
               {"min_member_triangles", p.min_member_triangles}};
        e["pivot"] = p.pivot ? Json(*p.pivot) : Json(nullptr);
        j["peels"].push_back(std::move(e));
    }
    j["residuals"] = Json::array();
    for (const auto& r : t.residuals)
        j["residuals"].push_back({{"stage", r.stage}, {"size", r.size}, {"colors", r.colors}});
    j["fallbacks"] = Json::array();
    for (const auto& f : t.fallbacks)
        j["fallbacks"].push_back({{"stage", f.stage}, {"reason", f.reason}});
    j["peel_count_checks"] = Json::array();
    for (const auto& c : t.peel_count_checks)
        j["peel_count_checks"].push_back({{"n", c.n},
                                          {"y", c.y},
                                          {"d", round12(c.d)},
                                          {"peels", c.peels},
                                          {"bound", round12(c.bound)},
                                          {"pass", c.pass()}});
    j["layered_runs"] = Json::array();
    for (const auto& l : t.layered_runs)
        j["layered_runs"].push_back({{"f", round12(l.f)},
                                     {"classes", l.classes},
                                     {"palette_size", l.palette_size},
                                     {"colored_neighbor_bound", round12(l.colored_neighbor_bound)},
                                     {"max_colored_neighbors", l.max_colored_neighbors},
                                     {"max_ratio_to_two_d_over_f", round12(l.max_ratio_to_two_d_over_f)},
                                     {"fallback_layers", l.fallback_layers},
                                     {"colors_used", l.colors_used}});
    j["base_runs"] = Json::array();
    for (const auto& b : t.base_runs)
        j["base_runs"].push_back({{"strategy", std::string(to_string(b.strategy))},
                                  {"max_degree", b.max_degree},
                                  {"degeneracy", b.degeneracy},
                                  {"y", b.y},
                                  {"target", round12(b.target)},
                                  {"colors_used", b.colors_used},
                                  {"heuristic_colors", b.heuristic_colors},
                                  {"sampled_classes", b.sampled_classes},
                                  {"stalled", b.stalled}});
    if (!t.candidates.empty()) {
        j["candidates"] = Json::array();
        for (const auto& [name, colors] : t.candidates)
            j["candidates"].push_back({{"algorithm", name}, {"colors", colors}});
    }
    return j;
}

Json instance_json(const CertifiedInstance& c)
{
    const auto& s = c.spec;
    Json measured{{"n", c.certificate.n},
                  {"m", c.certificate.m},
                  {"t", c.certificate.t},
                  {"y", c.certificate.y},
                  {"max_degree", c.certificate.max_degree}};
    if (c.certificate.alpha)
        measured["alpha"] = *c.certificate.alpha;
    Json target = Json::object();
    for (const auto& [k, v] : c.target)
        target[k] = round12(v);
    return {
        {"family", std::string(to_string(s.family))},
        {"params",
         {{"n", s.n}, {"p", round12(s.p)}, {"k", s.k}, {"i", s.i}, {"y", s.y}, {"t", s.t}, {"m", s.m}}},
        {"seed", s.seed},
        {"measured", std::move(measured)},
        {"target", std::move(target)},
        {"notes", c.notes},
    };
}

}  // namespace

std::string to_json(const FeasibilityVerdict& v, int indent) { return verdict_json(v).dump(indent); }
std::string to_json(const BoundsReport& r, int indent) { return bounds_json(r).dump(indent); }
std::string to_json(const ParameterRecord& p, int indent) { return parameters_json(p).dump(indent); }
std::string to_json(const RunTrace& t, int indent) { return trace_json(t).dump(indent); }
std::string to_json(const CertifiedInstance& c, int indent) { return instance_json(c).dump(indent); }

std::string analysis_json(const Graph& g, int indent)
{
    const auto stats = count_triangles(g);
    const auto report = evaluate_bounds(g.num_vertices(), g.num_edges(), stats.total, stats.local_bound);
    Json j{{"n", g.num_vertices()},
           {"m", g.num_edges()},
           {"t", stats.total},
           {"y", stats.local_bound},
           {"max_degree", g.max_degree()},
           {"degeneracy", degeneracy_order(g).degeneracy},
           {"bounds", bounds_json(report)},
           {"feasibility", verdict_json(report.feasibility)}};
    return j.dump(indent);
}

}  // namespace trichrome
