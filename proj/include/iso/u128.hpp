#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iso {

// 128-bit unsigned counts. Large enough for every exact quantity in scope
// (binomials up to C(133,66), subset counts up to 2^64).
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline u128 parse_u128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + s);
        u128 nv = v * 10 + u128(c - '0');
        if (nv < v) throw std::overflow_error("integer too large: " + s);
        v = nv;
    }
    return v;
}

}  // namespace iso
