#pragma once

#include <cstdio>
#include <string>

namespace spritemesh {

// Formatting helpers for the hand-written JSON emitters. Both the mesh and
// skeleton JSON formats are byte-deterministic, so floats are formatted here
// rather than left to a serializer.

// Fixed 3 decimals (mesh vertex coordinates).
inline std::string fmt_f3(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// 6 significant digits (skeleton JSON).
inline std::string fmt_g6(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Minimal JSON string escaping: backslash, quote, and control characters.
inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace spritemesh
