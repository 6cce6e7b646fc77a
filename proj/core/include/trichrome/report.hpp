#pragma once

#include <string>

#include "trichrome/bounds.hpp"
#include "trichrome/composite.hpp"
#include "trichrome/generators.hpp"
#include "trichrome/oracles.hpp"
#include "trichrome/triangles.hpp"

namespace trichrome {

// JSON serializations for CLI output and persisted reports. All return a
// compact JSON document as text; floating values use 12 significant digits.

std::string to_json(const FeasibilityVerdict& v, int indent = -1);
std::string to_json(const BoundsReport& r, int indent = -1);
std::string to_json(const ParameterRecord& p, int indent = -1);
std::string to_json(const RunTrace& t, int indent = -1);
std::string to_json(const CertifiedInstance& c, int indent = -1);

/// {n, m, t, y, max_degree, degeneracy, bounds, feasibility}.
std::string analysis_json(const Graph& g, int indent = -1);

}  // namespace trichrome
