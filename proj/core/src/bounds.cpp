#include "trichrome/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trichrome/errors.hpp"
#include "wide.hpp"

namespace trichrome {

double tlog(double x)
{
    if (!(x > 0.0))
        throw DomainError("tlog requires x > 0");
    return x > std::numbers::e ? std::log(x) : 1.0;
}

double tlog_or_one(double x) noexcept { return x > std::numbers::e ? std::log(x) : 1.0; }

namespace {

using detail::make_check;
using detail::u128;

double d(std::uint64_t v) { return static_cast<double>(v); }

/// Smallest integer >= z (at least 1), tolerant of floating noise just above an integer.
std::int64_t ceil_threshold(double z)
{
    const double c = std::ceil(z - 1e-9 * std::max(1.0, std::fabs(z)));
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(c));
}

std::int64_t floor_int(double z) { return static_cast<std::int64_t>(std::floor(z + 1e-9 * std::max(1.0, z))); }

}  // namespace

bool FeasibilityVerdict::pass() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const FeasibilityCheck* FeasibilityVerdict::first_failure() const noexcept
{
    for (const auto& c : checks)
        if (!c.pass)
            return &c;
    return nullptr;
}

FeasibilityVerdict check_feasibility(std::uint64_t n, std::uint64_t m, std::uint64_t t, std::uint64_t y)
{
    FeasibilityVerdict v;
    const u128 N = n, M = m, T = t, Y = y;
    v.checks.push_back(make_check("t <= n*y", T, N * Y));
    v.checks.push_back(make_check("t^2 <= m^2*y", T * T, M * M * Y));
    v.checks.push_back(make_check("y <= C(n-1,2)", Y, n >= 1 ? (N - 1) * (n >= 2 ? N - 2 : 0) / 2 : 0));
    v.checks.push_back(make_check("y <= n^2", Y, N * N));
    v.checks.push_back(make_check("m <= C(n,2)", M, n >= 1 ? N * (N - 1) / 2 : 0));
    return v;
}

FeasibilityError::FeasibilityError(FeasibilityVerdict verdict)
    : std::invalid_argument("infeasible parameters: " +
                            (verdict.first_failure() ? verdict.first_failure()->name : std::string("?"))),
      verdict_(std::move(verdict))
{
}

BoundsReport evaluate_bounds(std::uint64_t n, std::uint64_t m, std::uint64_t t, std::uint64_t y,
                             const BoundConstants& constants)
{
    BoundsReport r;
    r.feasibility = check_feasibility(n, m, t, y);
    if (!r.feasibility.pass())
        throw FeasibilityError(r.feasibility);

    r.n = n;
    r.m = m;
    r.t = t;
    r.y = y;
    r.y_clamped = std::max<std::uint64_t>(y, 1);
    r.constants = constants;
    const double yc = d(r.y_clamped);

    r.log_n = tlog_or_one(d(n));
    r.log_m = tlog_or_one(d(m));
    r.f_n = tlog_or_one(d(n) * d(n) / yc);
    r.f_m = tlog_or_one(d(m) / yc);
    r.g = tlog_or_one(d(t) * d(t) / (yc * yc * yc));

    const double vertex_term = std::sqrt(d(n) / r.log_n);
    const double edge_term = std::cbrt(d(m)) / std::pow(r.log_m, 2.0 / 3.0);
    const double triangle_term = std::cbrt(d(t)) * tlog_or_one(r.g) / std::pow(r.g, 2.0 / 3.0);
    const double cube_six_t = std::cbrt(6.0 * d(t));

    const std::array<double, 6> raw{
        vertex_term + std::cbrt(d(n) * yc) / std::pow(r.f_n, 2.0 / 3.0),
        edge_term + std::pow(d(m) * yc, 0.25) / std::pow(r.f_m, 0.75),
        vertex_term + triangle_term,
        edge_term + triangle_term,
        vertex_term + cube_six_t,
        edge_term + cube_six_t,
    };
    for (std::size_t i = 0; i < 6; ++i)
        r.a[i] = constants.factor[i] * raw[i];
    r.argmin = static_cast<int>(std::min_element(r.a.begin(), r.a.end()) - r.a.begin()) + 1;
    return r;
}

double explicit_constant_bound(std::uint64_t n, std::uint64_t t, double sqrt_coefficient)
{
    return sqrt_coefficient * std::sqrt(d(n)) + std::cbrt(6.0 * d(t));
}

std::string_view to_string(AlgorithmId id) noexcept
{
    switch (id) {
    case AlgorithmId::prop0:
        return "prop0";
    case AlgorithmId::ttprop2:
        return "ttprop2";
    case AlgorithmId::prop0a:
        return "prop0a";
    case AlgorithmId::ttprop3:
        return "ttprop3";
    case AlgorithmId::twprop1:
        return "twprop1";
    case AlgorithmId::hybrid_n:
        return "hybrid-n";
    case AlgorithmId::hybrid_m:
        return "hybrid-m";
    case AlgorithmId::conjectural:
        return "conjectural";
    }
    return "?";
}

AlgorithmId parse_algorithm(std::string_view name)
{
    for (auto id : kAllAlgorithms)
        if (to_string(id) == name)
            return id;
    if (name == "hybrid_n")
        return AlgorithmId::hybrid_n;
    if (name == "hybrid_m")
        return AlgorithmId::hybrid_m;
    throw PreconditionError("unknown algorithm '" + std::string(name) + "'");
}

std::optional<double> ParameterRecord::real(std::string_view name) const
{
    for (const auto& [k, v] : reals)
        if (k == name)
            return v;
    return std::nullopt;
}

std::optional<std::int64_t> ParameterRecord::integer(std::string_view name) const
{
    for (const auto& [k, v] : integers)
        if (k == name)
            return v;
    return std::nullopt;
}

double ParameterRecord::real_or(std::string_view name, double fallback) const
{
    return real(name).value_or(fallback);
}

std::int64_t ParameterRecord::integer_or(std::string_view name, std::int64_t fallback) const
{
    return integer(name).value_or(fallback);
}

ParameterRecord choose_parameters(AlgorithmId id, std::uint64_t n_, std::uint64_t m_, std::uint64_t t_,
                                  std::uint64_t y_)
{
    ParameterRecord p;
    p.algorithm = std::string(to_string(id));
    const double n = d(n_), m = d(m_), t = d(t_);
    const double y = d(std::max<std::uint64_t>(y_, 1));
    const double log_n = tlog_or_one(n);
    const double log_m = tlog_or_one(m);
    auto real = [&](const char* k, double v) { p.reals.emplace_back(k, v); };
    auto integer = [&](const char* k, std::int64_t v) { p.integers.emplace_back(k, v); };
    real("n", n);
    real("m", m);
    real("t", t);
    real("y", y);

    switch (id) {
    case AlgorithmId::prop0: {
        const double f = tlog_or_one(n * n / y);
        const double pivot = std::sqrt(n * log_n);
        double dd;
        if (y <= pivot) {
            p.branch = "y <= sqrt(n log n)";
            dd = pivot;
        } else {
            p.branch = "y > sqrt(n log n)";
            dd = std::cbrt(n * y * f);
        }
        real("f", f);
        real("d", dd);
        integer("degree_threshold", floor_int(dd));
        break;
    }
    case AlgorithmId::ttprop2:
    case AlgorithmId::conjectural: {
        const double f = tlog_or_one(t * t / (y * y * y));
        const double dd = std::cbrt(f * t) + std::sqrt(n);
        real("f", f);
        real("d", dd);
        integer("degree_threshold", floor_int(dd));
        if (id == AlgorithmId::ttprop2) {
            const double z = n > 0 ? t / n : 0.0;
            real("z", z);
            integer("k", dd >= 1.0 ? floor_int(std::log2(dd)) : 0);
            integer("triangle_threshold", ceil_threshold(z));
            p.branch = "split at z = t/n";
        } else {
            const bool sparse_case = std::sqrt(n) < std::cbrt(t * f);
            p.branch = sparse_case ? "sqrt(n) < (t f)^(1/3)" : "sqrt(n) >= (t f)^(1/3)";
        }
        break;
    }
    case AlgorithmId::prop0a: {
        const double pivot = std::cbrt(m * log_m);
        double y_eff = y;
        if (y > pivot) {
            p.branch = "y > (m log m)^(1/3)";
        } else {
            p.branch = "y <= (m log m)^(1/3): use y' = (m log m)^(1/3)";
            y_eff = std::max(pivot, 1.0);
        }
        const double f = tlog_or_one(m / y_eff);
        const double dd = std::pow(m * y_eff * f, 0.25);
        real("y_effective", y_eff);
        real("f", f);
        real("d", dd);
        integer("degree_threshold", floor_int(dd));
        break;
    }
    case AlgorithmId::ttprop3: {
        const double f = tlog_or_one(t * t / (y * y * y));
        const double z = m > 0 ? std::cbrt(f) * std::pow(t, 2.0 / 3.0) / std::cbrt(m) : 0.0;
        real("f", f);
        real("z", z);
        integer("triangle_threshold", ceil_threshold(z));
        p.branch = "split at z = f^(1/3) t^(2/3) / m^(1/3)";
        break;
    }
    case AlgorithmId::twprop1: {
        const double bound = explicit_constant_bound(n_, t_);
        real("bound", bound);
        integer("d", floor_int(bound));
        p.branch = "explicit";
        break;
    }
    case AlgorithmId::hybrid_n:
    case AlgorithmId::hybrid_m: {
        const double lg = id == AlgorithmId::hybrid_n ? log_n : log_m;
        const double threshold = std::cbrt(t) * lg * lg;
        real("threshold", threshold);
        integer("triangle_threshold", ceil_threshold(threshold));
        p.branch = id == AlgorithmId::hybrid_n ? "split at t^(1/3) log^2 n" : "split at t^(1/3) log^2 m";
        break;
    }
    }
    return p;
}

}  // namespace trichrome
