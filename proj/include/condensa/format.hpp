#pragma once

#include <cstdio>
#include <string>

namespace condensa {

/// Formats a double with 17 significant digits, enough to round-trip
/// exactly through text.
inline std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace condensa
