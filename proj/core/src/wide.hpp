#pragma once

#include <algorithm>
#include <string>

#include "trichrome/bounds.hpp"

namespace trichrome::detail {

using u128 = unsigned __int128;

inline std::string to_decimal(u128 v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline FeasibilityCheck make_check(std::string name, u128 lhs, u128 rhs)
{
    return {std::move(name), to_decimal(lhs), to_decimal(rhs), lhs <= rhs};
}

}  // namespace trichrome::detail
