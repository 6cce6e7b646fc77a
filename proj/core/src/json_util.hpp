#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace trichrome::detail {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so the serializer's shortest round-trip
/// form prints at most 12 digits.
inline double round12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline std::string dump(const Json& j, int indent) { return j.dump(indent); }

}  // namespace trichrome::detail
