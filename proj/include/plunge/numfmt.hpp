// numfmt.hpp
// Deterministic textual formatting of doubles for CSV artifacts.
// All writers use 12 significant digits so that values loaded from
// conforming files survive a write/reload round trip bit-exactly.

#pragma once

#include <cstdio>
#include <string>

namespace plunge {

inline std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace plunge
