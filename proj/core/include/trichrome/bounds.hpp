#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trichrome {

/// Truncated logarithm: ln(x) for x > e, otherwise 1. Throws DomainError for x <= 0.
double tlog(double x);

/// tlog that treats a non-positive argument as lying below e. Used where a
/// zero count (t = 0, m = 0) would otherwise feed tlog a zero ratio.
double tlog_or_one(double x) noexcept;

struct FeasibilityCheck {
    std::string name;
    /// Both sides as the exact integers compared (squared where a root appears).
    std::string lhs;
    std::string rhs;
    bool pass = true;
};

struct FeasibilityVerdict {
    std::vector<FeasibilityCheck> checks;
    bool pass() const noexcept;
    const FeasibilityCheck* first_failure() const noexcept;
};

/// Exact integer checks among (n, m, t, y): t <= n*y, t^2 <= m^2*y,
/// y <= C(n-1, 2), y <= n^2, m <= C(n, 2).
FeasibilityVerdict check_feasibility(std::uint64_t n, std::uint64_t m, std::uint64_t t, std::uint64_t y);

class FeasibilityError : public std::invalid_argument {
public:
    explicit FeasibilityError(FeasibilityVerdict verdict);
    const FeasibilityVerdict& verdict() const noexcept { return verdict_; }

private:
    FeasibilityVerdict verdict_;
};

/// Multiplicative constants applied to a1..a6. All 1 by default, so reports
/// show raw formula values.
struct BoundConstants {
    std::array<double, 6> factor{1, 1, 1, 1, 1, 1};
};

struct BoundsReport {
    std::uint64_t n = 0, m = 0, t = 0;
    std::uint64_t y = 0;          // as given
    std::uint64_t y_clamped = 1;  // max(y, 1), used in every formula
    double f_n = 1;               // tlog(n^2 / y)
    double f_m = 1;               // tlog(m / y)
    double g = 1;                 // tlog(t^2 / y^3)
    double log_n = 1;
    double log_m = 1;
    std::array<double, 6> a{};
    /// 1-based index of the smallest a_i.
    int argmin = 1;
    BoundConstants constants{};
    FeasibilityVerdict feasibility;
};

/// Evaluates a1..a6 with tlog in every logarithm position and the o(1) terms
/// of a5/a6 dropped. Throws FeasibilityError when the raw inputs are
/// infeasible; y is clamped to 1 only after the check.
BoundsReport evaluate_bounds(std::uint64_t n, std::uint64_t m, std::uint64_t t, std::uint64_t y,
                             const BoundConstants& constants = {});

/// 100 sqrt(n) + (6 t)^(1/3): the unconditional, explicit-constant bound.
double explicit_constant_bound(std::uint64_t n, std::uint64_t t, double sqrt_coefficient = 100.0);

enum class AlgorithmId {
    prop0,        // vertex count + local triangle bound
    ttprop2,      // triangle buckets
    prop0a,       // edge count + local triangle bound
    ttprop3,      // edge count + triangles
    twprop1,      // explicit constant
    hybrid_n,
    hybrid_m,
    conjectural,  // experimental
};

inline constexpr std::array<AlgorithmId, 8> kAllAlgorithms{
    AlgorithmId::prop0,    AlgorithmId::ttprop2,  AlgorithmId::prop0a,   AlgorithmId::ttprop3,
    AlgorithmId::twprop1,  AlgorithmId::hybrid_n, AlgorithmId::hybrid_m, AlgorithmId::conjectural,
};

std::string_view to_string(AlgorithmId id) noexcept;
/// Accepts the CLI names (prop0, ttprop2, prop0a, ttprop3, twprop1, hybrid-n,
/// hybrid-m, conjectural). Throws PreconditionError on unknown names.
AlgorithmId parse_algorithm(std::string_view name);

/// Parameter values a proof recipe prescribes for given (n, m, t, y).
struct ParameterRecord {
    std::string algorithm;
    std::string branch;
    std::vector<std::pair<std::string, double>> reals;
    /// Integer roundings actually used downstream: floor for degree-style
    /// thresholds, ceil for set-size and count thresholds.
    std::vector<std::pair<std::string, std::int64_t>> integers;

    std::optional<double> real(std::string_view name) const;
    std::optional<std::int64_t> integer(std::string_view name) const;
    double real_or(std::string_view name, double fallback) const;
    std::int64_t integer_or(std::string_view name, std::int64_t fallback) const;
};

/// y is clamped to >= 1 internally. Recipes:
///  prop0      y <= sqrt(n log n): d = sqrt(n log n); else d = (n y f)^(1/3), f = log(n^2/y)
///  ttprop2    f = log(t^2/y^3), d = (f t)^(1/3) + sqrt(n), k = floor(log2 d), z = t/n
///  prop0a     y > (m log m)^(1/3): d = (m y f)^(1/4), f = log(m/y); else same with y' = (m log m)^(1/3)
///  ttprop3    f = log(t^2/y^3), z = f^(1/3) t^(2/3) / m^(1/3)
///  twprop1    d = floor(100 sqrt(n) + (6t)^(1/3))
///  hybrid-n   threshold = t^(1/3) log^2 n
///  hybrid-m   threshold = t^(1/3) log^2 m
///  conjectural f = log(t^2/y^3), d = (t f)^(1/3) + sqrt(n)
ParameterRecord choose_parameters(AlgorithmId id, std::uint64_t n, std::uint64_t m, std::uint64_t t,
                                  std::uint64_t y);

}  // namespace trichrome
