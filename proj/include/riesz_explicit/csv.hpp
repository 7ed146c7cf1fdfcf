#pragma once

// CSV conventions shared by the CLI and tests: '.' decimal point, LF line
// endings, 17 significant digits (binary64 round-trips exactly).

#include <cstdio>
#include <string>

namespace riesz {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace riesz
