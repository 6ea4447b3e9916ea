#pragma once

#include <limits>

namespace mv {

/// Alternating-path level value; kInfLevel stands for "no such path".
using Level = int;

inline constexpr Level kInfLevel = std::numeric_limits<Level>::max();

inline bool level_finite(Level x) { return x != kInfLevel; }

/// Saturating addition over extended naturals.
inline Level level_add(Level a, Level b) {
    if (a == kInfLevel || b == kInfLevel) return kInfLevel;
    if (a > kInfLevel - b) return kInfLevel;
    return a + b;
}

inline Level level_min(Level a, Level b) { return a < b ? a : b; }
inline Level level_max(Level a, Level b) { return a > b ? a : b; }

}  // namespace mv
